//! The property sweep behind `hwmod verify`.

use std::collections::BTreeSet;

use hwmod::character::{character_support, verma_character, wcf_character};
use hwmod::hwmodule::{
    antidominant, formulas_agree, j_lambda, levi_weights, simply_regular, weights_levi_shift, Offset,
};
use hwmod::oracle::{verma_multiplicity, Oracle};
use hwmod::polyhedron::{
    faces, geometric_faces, h_to_v, hull_of, unbounded_edges_at, v_to_h, weyl_stabilizer_is, VPolyhedron,
};
use hwmod::rational::{fmt_vector, int, Rational};
use hwmod::{HWModule, IndexSet, ModuleClass, Weight, WeylGroup};
use serde::Serialize;

use crate::minmax::{admissible_j_primes, descriptors, minmax};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    FormulasAgree,
    ContainmentChain,
    HullSoundness,
    Vertices,
    Stabilizer,
    ExtremalRays,
    FaceCount,
    RoundTrip,
    OracleSupport,
    Wcf,
    Minmax,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::FormulasAgree,
        Property::ContainmentChain,
        Property::HullSoundness,
        Property::Vertices,
        Property::Stabilizer,
        Property::ExtremalRays,
        Property::FaceCount,
        Property::RoundTrip,
        Property::OracleSupport,
        Property::Wcf,
        Property::Minmax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::FormulasAgree => "formulas-agree",
            Property::ContainmentChain => "containment-chain",
            Property::HullSoundness => "hull-soundness",
            Property::Vertices => "vertices",
            Property::Stabilizer => "stabilizer",
            Property::ExtremalRays => "extremal-rays",
            Property::FaceCount => "face-count",
            Property::RoundTrip => "round-trip",
            Property::OracleSupport => "oracle-support",
            Property::Wcf => "wcf",
            Property::Minmax => "minmax",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

/// Outcome of one property on one module (or one weight).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub property: Property,
    pub module: Option<String>,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// A command reproducing the computation.
    pub reproduce: String,
}

pub struct Suite<'a> {
    pub group: &'a WeylGroup,
    pub depth: u32,
    pub oracle_cap: u32,
}

fn fail_or_pass(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

fn verdict<T>(r: hwmod::Result<T>, f: impl FnOnce(T) -> Verdict) -> Verdict {
    match r {
        Ok(v) => f(v),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn lambda_arg(lambda: &Weight) -> String {
    lambda.coords().iter().map(hwmod::rational::fmt_rational).collect::<Vec<_>>().join(",")
}

fn point_set(p: &VPolyhedron) -> BTreeSet<Vec<Rational>> {
    p.vertices().iter().cloned().collect()
}

impl Suite<'_> {
    fn ty(&self) -> String {
        self.group.root_system().spec().to_string()
    }

    fn repro(&self, cmd: &str, lambda: &Weight, class: Option<ModuleClass>, depth: bool) -> String {
        let mut s = format!("hwmod {cmd} {} --lambda {}", self.ty(), lambda_arg(lambda));
        if let Some(c) = class {
            s += &format!(" --class {c}");
        }
        if depth {
            s += &format!(" --depth {}", self.depth);
        }
        s
    }

    fn check(&self, property: Property, m: Option<&HWModule>, lambda: &Weight, cmd: &str, v: Verdict) -> Check {
        let uses_depth = !matches!(cmd, "hull" | "faces" | "minmax");
        Check {
            property,
            module: m.map(|m| m.class().to_string()),
            verdict: v,
            reproduce: self.repro(cmd, lambda, m.map(HWModule::class), uses_depth),
        }
    }

    /// Runs every property for one highest weight.
    pub fn run(&self, lambda: &Weight) -> Vec<Check> {
        let mut out = Vec::new();
        let modules = match descriptors(self.group, lambda) {
            Ok(m) => m,
            Err(e) => {
                out.push(self.check(Property::FormulasAgree, None, lambda, "weights", Verdict::Fail(e.to_string())));
                return out;
            }
        };
        for m in &modules {
            out.push(self.check(Property::FormulasAgree, Some(m), lambda, "weights", self.formulas(m)));
            out.push(self.check(Property::HullSoundness, Some(m), lambda, "hull", self.soundness(m)));
            out.push(self.check(Property::Vertices, Some(m), lambda, "hull", self.vertices(m)));
            out.push(self.check(Property::Stabilizer, Some(m), lambda, "hull", self.stabilizer(m)));
            out.push(self.check(Property::ExtremalRays, Some(m), lambda, "hull", self.extremal_rays(m)));
            out.push(self.check(Property::FaceCount, Some(m), lambda, "faces", self.face_count(m)));
            out.push(self.check(Property::RoundTrip, Some(m), lambda, "hull", self.round_trip(m)));
        }
        out.push(self.check(Property::ContainmentChain, None, lambda, "weights", self.containment(lambda)));
        let simple = Some(ModuleClass::Simple);
        let mut c = self.check(Property::OracleSupport, None, lambda, "character", self.oracle_support(lambda));
        c.reproduce = self.repro("weights", lambda, simple, true);
        out.push(c);
        let mut c = self.check(Property::Wcf, None, lambda, "character", self.wcf(lambda));
        c.reproduce += " --check-oracle";
        out.push(c);
        out.push(self.check(Property::Minmax, None, lambda, "minmax", self.minmax(lambda)));
        out
    }

    pub fn formulas(&self, m: &HWModule) -> Verdict {
        verdict(formulas_agree(self.group, m, self.depth), |r| {
            fail_or_pass(r.all_agree(), || r.disagreements().join("; "))
        })
    }

    /// Formula-B weights lie in the H-representation, and the hull vertices
    /// are weights.
    pub fn soundness(&self, m: &HWModule) -> Verdict {
        let rs = self.group.root_system();
        verdict(
            (|| {
                let p = hull_of(self.group, m)?;
                let h = v_to_h(&p)?;
                let b = weights_levi_shift(rs, m, self.depth)?;
                let outside: Vec<Offset> = b
                    .offsets()
                    .filter(|k| !h.contains(&rs.root_coords(&rs.lower(m.lambda(), &k.0)).unwrap()))
                    .cloned()
                    .collect();
                let levi = levi_weights(rs, m.lambda(), m.integrability_set())?;
                let base = rs.root_coords(m.lambda())?;
                let stray: Vec<Vec<Rational>> = p
                    .canonical()?
                    .vertices()
                    .iter()
                    .filter(|v| {
                        let k: Vec<i64> = base
                            .iter()
                            .zip(v.iter())
                            .map(|(a, b)| hwmod::rational::to_i64(&(a - b)).unwrap_or(-1))
                            .collect();
                        !levi.offsets().contains(&Offset(k))
                    })
                    .cloned()
                    .collect();
                Ok((outside, stray))
            })(),
            |(outside, stray)| {
                fail_or_pass(outside.is_empty() && stray.is_empty(), || {
                    format!("weights outside the hull: {outside:?}; vertices that are not weights: {stray:?}")
                })
            },
        )
    }

    pub fn vertices(&self, m: &HWModule) -> Verdict {
        let rs = self.group.root_system();
        verdict(
            (|| {
                let canon = hull_of(self.group, m)?.canonical()?;
                let orbit: BTreeSet<Vec<Rational>> = self
                    .group
                    .orbit(m.integrability_set(), m.lambda())?
                    .iter()
                    .map(|w| rs.root_coords(w).unwrap())
                    .collect();
                Ok((point_set(&canon), orbit))
            })(),
            |(v, o)| fail_or_pass(v == o, || format!("{} vertices, orbit of size {}", v.len(), o.len())),
        )
    }

    pub fn stabilizer(&self, m: &HWModule) -> Verdict {
        verdict(weyl_stabilizer_is(self.group, m), |st| {
            let j = m.integrability_set();
            fail_or_pass(st.is_parabolic && st.largest_parabolic == j, || {
                format!(
                    "stabilizer of order {} (parabolic: {}, largest J = {}), expected W_J with J = {j}",
                    st.order, st.is_parabolic, st.largest_parabolic
                )
            })
        })
    }

    pub fn extremal_rays(&self, m: &HWModule) -> Verdict {
        if !simply_regular(m.lambda()) {
            return Verdict::Skip("lambda is not simply-regular".into());
        }
        let rs = self.group.root_system();
        let n = rs.rank();
        verdict(
            (|| {
                let h = v_to_h(&hull_of(self.group, m)?)?;
                let x = rs.root_coords(m.lambda())?;
                Ok(unbounded_edges_at(&h, &x))
            })(),
            |edges| {
                let Some(edges) = edges else {
                    return Verdict::Fail("lambda is not a vertex".into());
                };
                let got: BTreeSet<Vec<Rational>> = edges.into_iter().collect();
                let want: BTreeSet<Vec<Rational>> = rs
                    .index_set()
                    .difference(m.integrability_set())
                    .iter()
                    .map(|i| (0..n).map(|k| int(-i64::from(k == i))).collect())
                    .collect();
                fail_or_pass(got == want, || {
                    let show = |s: &BTreeSet<Vec<Rational>>| s.iter().map(|v| fmt_vector(v)).collect::<Vec<_>>().join(" ");
                    format!("unbounded edges {} but expected {}", show(&got), show(&want))
                })
            },
        )
    }

    /// Deduplicated `(w, J)` faces coincide with the faces read off the
    /// H-representation.
    pub fn face_count(&self, m: &HWModule) -> Verdict {
        verdict(
            (|| {
                let labelled = faces(self.group, m)?;
                let h = v_to_h(&hull_of(self.group, m)?)?;
                let (gens, geo) = geometric_faces(&h)?;
                let a: BTreeSet<VPolyhedron> = labelled.into_iter().map(|f| f.realization).collect();
                let b: BTreeSet<VPolyhedron> = geo.iter().map(|f| f.realize(&gens)).collect();
                Ok((a, b))
            })(),
            |(a, b)| fail_or_pass(a == b, || format!("{} labelled faces, {} geometric faces", a.len(), b.len())),
        )
    }

    pub fn round_trip(&self, m: &HWModule) -> Verdict {
        verdict(
            (|| {
                let p = hull_of(self.group, m)?;
                let h = v_to_h(&p)?;
                let back = h_to_v(&h)?;
                Ok((back == p.canonical()?, v_to_h(&back)? == h))
            })(),
            |(a, b)| fail_or_pass(a && b, || "V -> H -> V does not reproduce the canonical hull".into()),
        )
    }

    /// `wt L(lambda) subset wt M(lambda, J'') subset wt M(lambda, J') subset
    /// wt M(lambda)` for `J' subset J''`.
    pub fn containment(&self, lambda: &Weight) -> Verdict {
        let rs = self.group.root_system();
        verdict(
            (|| {
                let jl = j_lambda(lambda);
                let simple = weights_levi_shift(rs, &HWModule::simple(rs, lambda.clone())?, self.depth)?;
                let verma = weights_levi_shift(rs, &HWModule::verma(rs, lambda.clone())?, self.depth)?;
                let subsets: Vec<IndexSet> = jl.subsets().collect();
                let sets = subsets
                    .iter()
                    .map(|&j| weights_levi_shift(rs, &HWModule::parabolic(rs, lambda.clone(), j)?, self.depth))
                    .collect::<hwmod::Result<Vec<_>>>()?;
                let sub = |a: &hwmod::TruncatedWeightSet, b: &hwmod::TruncatedWeightSet| a.offsets().all(|k| b.contains(k));
                let mut bad = Vec::new();
                for (j, s) in subsets.iter().zip(&sets) {
                    if !sub(&simple, s) || !sub(s, &verma) {
                        bad.push(format!("pverma:{j}"));
                    }
                    for (j2, s2) in subsets.iter().zip(&sets) {
                        if j.is_subset(*j2) && !sub(s2, s) {
                            bad.push(format!("pverma:{j2} not inside pverma:{j}"));
                        }
                    }
                }
                Ok(bad)
            })(),
            |bad| fail_or_pass(bad.is_empty(), || bad.join("; ")),
        )
    }

    fn oracle_depth(&self) -> u32 {
        self.depth.min(self.oracle_cap)
    }

    pub fn oracle_support(&self, lambda: &Weight) -> Verdict {
        let rs = self.group.root_system();
        let d = self.oracle_depth();
        verdict(
            (|| {
                let oracle = Oracle::with_cap(rs, lambda, self.oracle_cap)?;
                let support = oracle.weight_support(d)?;
                let b = weights_levi_shift(rs, &HWModule::simple(rs, lambda.clone())?, d)?;
                let over: Vec<Offset> = support
                    .entries()
                    .filter(|(k, m)| m.unwrap_or(0) > verma_multiplicity(rs, &k.0))
                    .map(|(k, _)| k.clone())
                    .collect();
                Ok((support.same_support(&b), support.difference(&b), over))
            })(),
            |(same, (x, y), over)| {
                fail_or_pass(same && over.is_empty(), || {
                    format!("oracle only: {x:?}; formula B only: {y:?}; above the Kostant count: {over:?}")
                })
            },
        )
    }

    pub fn wcf(&self, lambda: &Weight) -> Verdict {
        let rs = self.group.root_system();
        match self.group.wcf_condition_holds(lambda) {
            Ok(false) => return Verdict::Skip("S_lambda differs from W_{J_lambda}".into()),
            Err(e) => return Verdict::Fail(e.to_string()),
            Ok(true) => {}
        }
        let d = self.oracle_depth();
        verdict(
            (|| {
                let ch = wcf_character(self.group, lambda, d)?;
                let oracle = Oracle::with_cap(rs, lambda, self.oracle_cap)?;
                let mut bad = Vec::new();
                for k in hwmod::hwmodule::offsets_up_to(rs.rank(), rs.index_set(), d) {
                    let o = oracle.simple_multiplicity(&k.0)?;
                    if o as i64 != ch.coeff(&k) {
                        bad.push(format!("{:?}: character {} oracle {o}", k.0, ch.coeff(&k)));
                    }
                }
                let b = weights_levi_shift(rs, &HWModule::simple(rs, lambda.clone())?, d)?;
                if !character_support(&ch).same_support(&b) {
                    bad.push("character support differs from formula B".into());
                }
                if antidominant(rs, lambda)? && ch != verma_character(rs, lambda, d)? {
                    bad.push("antidominant weight but the character is not the Verma character".into());
                }
                Ok(bad)
            })(),
            |bad| fail_or_pass(bad.is_empty(), || bad.join("; ")),
        )
    }

    pub fn minmax(&self, lambda: &Weight) -> Verdict {
        verdict(minmax(self.group, lambda, &admissible_j_primes(lambda)), |r| {
            fail_or_pass(r.all_equivalent, || {
                r.checks
                    .iter()
                    .filter(|c| !c.equivalent)
                    .map(|c| {
                        format!(
                            "{} with J' = {}: (1) {} (2) {} (3) {}",
                            c.module,
                            c.j_prime,
                            c.same_hull,
                            c.stabilizer_is_parabolic_j_prime,
                            c.largest_parabolic_is_j_prime
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ")
            })
        })
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Per-property counts over a list of checks, in property order.
pub fn tally(checks: &[Check]) -> Vec<(Property, Tally)> {
    Property::ALL
        .iter()
        .map(|&p| {
            let mut t = Tally::default();
            for c in checks.iter().filter(|c| c.property == p) {
                match c.verdict {
                    Verdict::Pass => t.passed += 1,
                    Verdict::Fail(_) => t.failed += 1,
                    Verdict::Skip(_) => t.skipped += 1,
                }
            }
            (p, t)
        })
        .collect()
}
