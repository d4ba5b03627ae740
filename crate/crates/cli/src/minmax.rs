//! For a highest weight `lambda` and `J' subset of J_lambda`, compares three
//! statements about a module `V` with highest weight `lambda`:
//!
//! 1. `conv wt V = conv wt M(lambda, J')`,
//! 2. the stabilizer of `conv wt V` in `W` is `W_{J'}`,
//! 3. the largest parabolic subgroup preserving `conv wt V` is `W_{J'}`.

use hwmod::hwmodule::{j_lambda, simply_regular};
use hwmod::polyhedron::{hull_of, stabilizer_of, StabilizerReport};
use hwmod::{HWModule, IndexSet, ModuleClass, Result, Weight, WeylGroup};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct MinmaxCheck {
    pub module: String,
    pub j_prime: IndexSet,
    pub same_hull: bool,
    pub stabilizer_is_parabolic_j_prime: bool,
    pub largest_parabolic_is_j_prime: bool,
    pub equivalent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinmaxReport {
    pub lambda: Weight,
    pub j_lambda: IndexSet,
    pub simply_regular: bool,
    pub j_primes: Vec<IndexSet>,
    pub checks: Vec<MinmaxCheck>,
    pub all_equivalent: bool,
    pub existence_of_extremal_modules: &'static str,
}

/// The `J'` allowed for this `lambda`: every subset of `J_lambda` when
/// `lambda` is simply-regular, otherwise only `{}` and `J_lambda`.
pub fn admissible_j_primes(lambda: &Weight) -> Vec<IndexSet> {
    let jl = j_lambda(lambda);
    if simply_regular(lambda) {
        jl.subsets().collect()
    } else if jl.is_empty() {
        vec![jl]
    } else {
        vec![IndexSet::empty(), jl]
    }
}

pub fn is_admissible(lambda: &Weight, j: IndexSet) -> bool {
    admissible_j_primes(lambda).contains(&j)
}

/// Every constructible module with highest weight `lambda`: the Verma
/// module, the simple module and all `M(lambda, J'')`.
pub fn descriptors(group: &WeylGroup, lambda: &Weight) -> Result<Vec<HWModule>> {
    let rs = group.root_system();
    let mut out = vec![HWModule::verma(rs, lambda.clone())?, HWModule::simple(rs, lambda.clone())?];
    for j in j_lambda(lambda).subsets() {
        out.push(HWModule::new(rs, lambda.clone(), ModuleClass::ParabolicVerma(j))?);
    }
    Ok(out)
}

pub fn minmax(group: &WeylGroup, lambda: &Weight, j_primes: &[IndexSet]) -> Result<MinmaxReport> {
    let rs = group.root_system();
    let modules = descriptors(group, lambda)?;
    let mut hulls = Vec::with_capacity(modules.len());
    for m in &modules {
        let p = hull_of(group, m)?.canonical()?;
        let st: StabilizerReport = stabilizer_of(group, &p)?;
        hulls.push((p, st));
    }
    let mut checks = Vec::new();
    for &jp in j_primes {
        let target = hull_of(group, &HWModule::parabolic(rs, lambda.clone(), jp)?)?.canonical()?;
        let wj = group.parabolic(jp)?.len();
        for (m, (p, st)) in modules.iter().zip(&hulls) {
            let s1 = *p == target;
            let s2 = st.is_parabolic && st.largest_parabolic == jp && st.order == wj;
            let s3 = st.largest_parabolic == jp;
            checks.push(MinmaxCheck {
                module: m.class().to_string(),
                j_prime: jp,
                same_hull: s1,
                stabilizer_is_parabolic_j_prime: s2,
                largest_parabolic_is_j_prime: s3,
                equivalent: s1 == s2 && s2 == s3,
            });
        }
    }
    Ok(MinmaxReport {
        lambda: lambda.clone(),
        j_lambda: j_lambda(lambda),
        simply_regular: simply_regular(lambda),
        j_primes: j_primes.to_vec(),
        all_equivalent: checks.iter().all(|c| c.equivalent),
        checks,
        existence_of_extremal_modules: "not machine-checked",
    })
}
