//! Highest weight modules `M(lambda) ->> V`: the index sets `J_lambda` and
//! `J(V)`, the antidominance and simple-regularity predicates, finite Levi
//! weight sets, and the three descriptions of `wt V` in a finite
//! height window:
//!
//! * **A** lattice points of `lambda - Z Delta` inside the convex hull,
//! * **B** `wt L_J(lambda) - Z_+ (Phi+ \ Phi+_J)`,
//! * **C** the disjoint union of `wt L_J(lambda - mu)` over `mu in Z_+ Delta_{I \ J}`,
//!
//! with `J = J(V)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyhedron::{self, HPolyhedron};
use crate::rational::{fmt_rational, int, is_nonneg_integer, to_i64, Rational};
use crate::rootsys::{height, sum_positive_roots, IndexSet, RootSystem, Weight};
use crate::weyl::WeylGroup;

/// `J_lambda`: indices with `lambda(h_i)` a nonnegative integer.
pub fn j_lambda(lambda: &Weight) -> IndexSet {
    lambda.coords().iter().enumerate().filter(|(_, c)| is_nonneg_integer(c)).map(|(i, _)| i).collect()
}

/// Literal test of `(alpha, 2 lambda + sum Phi+) / (alpha, alpha) - 1` not in
/// `Z_+` for every positive root `alpha`.
pub fn antidominant(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    rs.check_weight(lambda)?;
    let shifted = lambda.scale(&int(2)).add(&sum_positive_roots(rs));
    for beta in rs.positive_roots() {
        let a = rs.from_int_root_coords(beta);
        let v = rs.bilinear(&a, &shifted)? / rs.bilinear(&a, &a)? - Rational::one();
        if is_nonneg_integer(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(lambda, alpha_i) != 0` for all `i`.
pub fn simply_regular(lambda: &Weight) -> bool {
    lambda.coords().iter().all(|c| !num_traits::Zero::is_zero(c))
}

pub fn is_dominant_integral(lambda: &Weight) -> bool {
    lambda.coords().iter().all(is_nonneg_integer)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleClass {
    Verma,
    /// `M(lambda, J')` with `J' subset of J_lambda`.
    ParabolicVerma(IndexSet),
    Simple,
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleClass::Verma => f.write_str("verma"),
            ModuleClass::Simple => f.write_str("simple"),
            ModuleClass::ParabolicVerma(j) => {
                let idx: Vec<String> = j.one_based().iter().map(usize::to_string).collect();
                write!(f, "pverma:{}", idx.join(","))
            }
        }
    }
}

impl ModuleClass {
    /// Parses `verma`, `simple`, `pverma:1,3` (1-based; `pverma:` is `J' = {}`).
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "verma" => Ok(ModuleClass::Verma),
            "simple" => Ok(ModuleClass::Simple),
            _ => match t.strip_prefix("pverma:") {
                Some(rest) => Ok(ModuleClass::ParabolicVerma(IndexSet::parse_one_based(rest, rank)?)),
                None => Err(Error::Parse(format!("unknown module class {s:?} (expected verma, simple, pverma:J)"))),
            },
        }
    }
}

/// A highest weight module descriptor `(lambda, class)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HWModule {
    lambda: Weight,
    class: ModuleClass,
}

impl HWModule {
    pub fn new(rs: &RootSystem, lambda: Weight, class: ModuleClass) -> Result<Self> {
        rs.check_weight(&lambda)?;
        if let ModuleClass::ParabolicVerma(j) = class {
            if !j.is_subset(rs.index_set()) {
                return Err(Error::IndexOutOfRange { index: j.iter().last().unwrap() + 1, rank: rs.rank() });
            }
            let jl = j_lambda(&lambda);
            if let Some(i) = j.difference(jl).iter().next() {
                return Err(Error::ParabolicNotInJLambda { index: i + 1, value: fmt_rational(lambda.coord(i)) });
            }
        }
        Ok(HWModule { lambda, class })
    }

    pub fn verma(rs: &RootSystem, lambda: Weight) -> Result<Self> {
        Self::new(rs, lambda, ModuleClass::Verma)
    }

    pub fn simple(rs: &RootSystem, lambda: Weight) -> Result<Self> {
        Self::new(rs, lambda, ModuleClass::Simple)
    }

    pub fn parabolic(rs: &RootSystem, lambda: Weight, j: IndexSet) -> Result<Self> {
        Self::new(rs, lambda, ModuleClass::ParabolicVerma(j))
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn class(&self) -> ModuleClass {
        self.class
    }

    /// `J(V)`: empty for Verma modules, `J_lambda` for simple modules, `J'`
    /// for `M(lambda, J')`.
    pub fn integrability_set(&self) -> IndexSet {
        match self.class {
            ModuleClass::Verma => IndexSet::empty(),
            ModuleClass::Simple => j_lambda(&self.lambda),
            ModuleClass::ParabolicVerma(j) => j,
        }
    }

    /// Whether the three formulas are guaranteed to agree: `|J_lambda \ J(V)| <= 1` or
    /// a parabolic Verma module (which includes Verma modules).
    pub fn formula_hypothesis(&self) -> bool {
        !matches!(self.class, ModuleClass::Simple) || j_lambda(&self.lambda).difference(self.integrability_set()).len() <= 1
    }
}

impl fmt::Display for HWModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.class, self.lambda)
    }
}

/// `lambda - mu` in simple-root coordinates, nonnegative. Ordered by height,
/// then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Offset(pub Vec<i64>);

impl Offset {
    pub fn zero(n: usize) -> Self {
        Offset(vec![0; n])
    }

    pub fn height(&self) -> i64 {
        height(&self.0)
    }

    pub fn supported_on(&self, j: IndexSet) -> bool {
        crate::rootsys::supported_on(&self.0, j)
    }

    pub fn plus(&self, other: &[i64]) -> Offset {
        Offset(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &[i64]) -> Offset {
        Offset(self.0.iter().zip(other).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Offset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Offset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All `k in Z_+^n` supported on `support` with `height(k) <= depth`, in
/// offset order.
pub fn offsets_up_to(n: usize, support: IndexSet, depth: u32) -> Vec<Offset> {
    fn rec(i: usize, n: usize, support: IndexSet, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Offset>) {
        if i == n {
            out.push(Offset(cur.clone()));
            return;
        }
        let max = if support.contains(i) { left } else { 0 };
        for v in 0..=max {
            cur.push(v);
            rec(i + 1, n, support, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, support, i64::from(depth), &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// A finite window `height <= depth` of the weights of a module, keyed by
/// offset from the highest weight, optionally with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedWeightSet {
    lambda: Weight,
    depth: u32,
    entries: BTreeMap<Offset, Option<u64>>,
}

impl TruncatedWeightSet {
    pub fn new(lambda: Weight, depth: u32) -> Self {
        TruncatedWeightSet { lambda, depth, entries: BTreeMap::new() }
    }

    pub fn from_support(lambda: Weight, depth: u32, offsets: impl IntoIterator<Item = Offset>) -> Self {
        let mut s = Self::new(lambda, depth);
        for k in offsets {
            s.insert(k, None);
        }
        s
    }

    /// Inserts an offset; offsets above the depth are ignored.
    pub fn insert(&mut self, k: Offset, mult: Option<u64>) {
        debug_assert!(k.0.iter().all(|&c| c >= 0));
        if k.height() <= i64::from(self.depth) {
            self.entries.insert(k, mult);
        }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, k: &Offset) -> bool {
        self.entries.contains_key(k)
    }

    pub fn multiplicity(&self, k: &Offset) -> Option<u64> {
        self.entries.get(k).copied().flatten()
    }

    pub fn offsets(&self) -> impl Iterator<Item = &Offset> {
        self.entries.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Offset, &Option<u64>)> {
        self.entries.iter()
    }

    pub fn support(&self) -> BTreeSet<Offset> {
        self.entries.keys().cloned().collect()
    }

    pub fn same_support(&self, other: &TruncatedWeightSet) -> bool {
        self.entries.keys().eq(other.entries.keys())
    }

    /// `(self \ other, other \ self)` on supports.
    pub fn difference(&self, other: &TruncatedWeightSet) -> (Vec<Offset>, Vec<Offset>) {
        let a: Vec<Offset> = self.offsets().filter(|k| !other.contains(k)).cloned().collect();
        let b: Vec<Offset> = other.offsets().filter(|k| !self.contains(k)).cloned().collect();
        (a, b)
    }

    /// The slice at a smaller depth.
    pub fn truncate(&self, depth: u32) -> TruncatedWeightSet {
        let mut t = Self::new(self.lambda.clone(), depth.min(self.depth));
        for (k, m) in &self.entries {
            t.insert(k.clone(), *m);
        }
        t
    }

    /// Offsets supported on `J`.
    pub fn restrict(&self, j: IndexSet) -> TruncatedWeightSet {
        let mut t = Self::new(self.lambda.clone(), self.depth);
        for (k, m) in &self.entries {
            if k.supported_on(j) {
                t.insert(k.clone(), *m);
            }
        }
        t
    }

    pub fn weights(&self, rs: &RootSystem) -> Vec<Weight> {
        self.entries.keys().map(|k| rs.lower(&self.lambda, &k.0)).collect()
    }

    pub fn to_json(&self) -> WeightSetJson {
        WeightSetJson {
            lambda: self.lambda.clone(),
            depth: self.depth,
            weights: self.entries.iter().map(|(k, m)| WeightEntryJson { offset: k.clone(), mult: *m }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightEntryJson {
    pub offset: Offset,
    pub mult: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightSetJson {
    pub lambda: Weight,
    pub depth: u32,
    pub weights: Vec<WeightEntryJson>,
}

/// Weights of the finite-dimensional simple `g_J`-module `L_J(nu)`, as
/// offsets from `nu` supported on `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviWeightSet {
    j: IndexSet,
    highest: Weight,
    offsets: BTreeSet<Offset>,
}

impl LeviWeightSet {
    pub fn j(&self) -> IndexSet {
        self.j
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn offsets(&self) -> &BTreeSet<Offset> {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn weights(&self, rs: &RootSystem) -> Vec<Weight> {
        self.offsets.iter().map(|k| rs.lower(&self.highest, &k.0)).collect()
    }
}

/// `wt L_J(nu)`, the finite set `(nu - Z_+ Delta_J) cap conv(W_J nu)`.
///
/// Computed as the closure of `{nu}` under `alpha_j`-strings for `j in J`:
/// a weight `mu` with `m = mu(h_j) != 0` brings in the whole string from
/// `mu` to `s_j mu`. The closure is the saturated set with highest weight
/// `nu`, which is exactly the weight set of the finite-dimensional module.
pub fn levi_weights(rs: &RootSystem, nu: &Weight, j: IndexSet) -> Result<LeviWeightSet> {
    rs.check_weight(nu)?;
    let n = rs.rank();
    let mut nu_int = vec![0i64; n];
    for i in j.iter() {
        let c = nu.coord(i);
        if !is_nonneg_integer(c) {
            return Err(Error::NotDominantIntegral { index: i + 1, value: fmt_rational(c) });
        }
        nu_int[i] = to_i64(c).ok_or_else(|| Error::Internal("coordinate too large".into()))?;
    }
    let start = Offset::zero(n);
    let mut seen: BTreeSet<Offset> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(k) = queue.pop_front() {
        for i in j.iter() {
            // mu(h_i) = nu(h_i) - sum_l k_l a_il
            let m = nu_int[i] - rs.pairing_root(&k.0, i);
            let step = m.signum();
            for t in 1..=m.abs() {
                let mut next = k.clone();
                next.0[i] += step * t;
                if next.0[i] < 0 {
                    return Err(Error::Internal(format!("Levi string left nu - Z_+ Delta at {next:?}")));
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(LeviWeightSet { j, highest: nu.clone(), offsets: seen })
}

/// Formula B: `wt L_J(lambda) - Z_+ (Phi+ \ Phi+_J)`, `J = J(V)`.
pub fn weights_levi_shift(rs: &RootSystem, m: &HWModule, depth: u32) -> Result<TruncatedWeightSet> {
    let j = m.integrability_set();
    let levi = levi_weights(rs, m.lambda(), j)?;
    let shifts = rs.positive_roots_outside(j);
    let d = i64::from(depth);
    let mut seen: BTreeSet<Offset> = levi.offsets.iter().filter(|k| k.height() <= d).cloned().collect();
    let mut queue: VecDeque<Offset> = seen.iter().cloned().collect();
    while let Some(k) = queue.pop_front() {
        for beta in &shifts {
            let next = k.plus(beta);
            if next.height() <= d && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(TruncatedWeightSet::from_support(m.lambda().clone(), depth, seen))
}

/// Formula C: `disjoint union over mu in Z_+ Delta_{I\J}` of
/// `wt L_J(lambda - mu)`, `J = J(V)`. Overlap between two summands is
/// reported as an internal error.
pub fn weights_integrable_decomposition(rs: &RootSystem, m: &HWModule, depth: u32) -> Result<TruncatedWeightSet> {
    let j = m.integrability_set();
    let complement = rs.index_set().difference(j);
    let mut owner: BTreeMap<Offset, Offset> = BTreeMap::new();
    for mu in offsets_up_to(rs.rank(), complement, depth) {
        let nu = rs.lower(m.lambda(), &mu.0);
        let levi = levi_weights(rs, &nu, j)?;
        for k in levi.offsets() {
            let total = mu.plus(&k.0);
            if let Some(prev) = owner.insert(total.clone(), mu.clone()) {
                return Err(Error::Internal(format!(
                    "summands for mu = {:?} and mu = {:?} share the weight at offset {:?}",
                    prev.0, mu.0, total.0
                )));
            }
        }
    }
    Ok(TruncatedWeightSet::from_support(m.lambda().clone(), depth, owner.into_keys()))
}

/// Formula A: lattice points `lambda - k` (`k >= 0`, `height(k) <= depth`)
/// inside the convex hull of the module's weights.
///
/// Points with a negative offset coordinate are never in the hull, because
/// the hull sits inside `lambda - cone(Phi+)`.
pub fn weights_hull_intersection(group: &WeylGroup, m: &HWModule, depth: u32) -> Result<TruncatedWeightSet> {
    let h = polyhedron::module_h_rep(group, m)?;
    Ok(lattice_points_in(group.root_system(), &h, m.lambda(), depth))
}

/// Lattice points `lambda - k` (`k >= 0`, `height(k) <= depth`) inside an
/// H-polyhedron given in root coordinates.
pub fn lattice_points_in(rs: &RootSystem, h: &HPolyhedron, lambda: &Weight, depth: u32) -> TruncatedWeightSet {
    let base = rs.root_coords(lambda).expect("rank checked by caller");
    let pts = offsets_up_to(rs.rank(), rs.index_set(), depth).into_iter().filter(|k| {
        let x: Vec<Rational> = base.iter().zip(&k.0).map(|(b, &c)| b - int(c)).collect();
        h.contains(&x)
    });
    TruncatedWeightSet::from_support(lambda.clone(), depth, pts)
}

/// `wt_J V`: the weights whose offset is supported on `J` (formula B).
pub fn wt_restricted(rs: &RootSystem, m: &HWModule, j: IndexSet, depth: u32) -> Result<TruncatedWeightSet> {
    Ok(weights_levi_shift(rs, m, depth)?.restrict(j))
}

/// Outcome of evaluating all three formulas on one module.
#[derive(Debug, Clone)]
pub struct FormulaReport {
    pub module: HWModule,
    pub depth: u32,
    pub hypothesis: bool,
    pub hull: TruncatedWeightSet,
    pub levi_shift: TruncatedWeightSet,
    pub decomposition: TruncatedWeightSet,
}

impl FormulaReport {
    pub fn all_agree(&self) -> bool {
        self.hull.same_support(&self.levi_shift) && self.levi_shift.same_support(&self.decomposition)
    }

    /// Human readable summary of any disagreement.
    pub fn disagreements(&self) -> Vec<String> {
        let mut out = Vec::new();
        let pairs = [
            ("A", &self.hull, "B", &self.levi_shift),
            ("B", &self.levi_shift, "C", &self.decomposition),
            ("A", &self.hull, "C", &self.decomposition),
        ];
        for (na, a, nb, b) in pairs {
            let (x, y) = a.difference(b);
            if !x.is_empty() || !y.is_empty() {
                out.push(format!("{na} \\ {nb} = {:?}; {nb} \\ {na} = {:?}", x, y));
            }
        }
        out
    }
}

/// Computes formulas A, B and C. Outside that hypothesis the report
/// is still produced, with `hypothesis = false`.
pub fn formulas_agree(group: &WeylGroup, m: &HWModule, depth: u32) -> Result<FormulaReport> {
    let rs = group.root_system();
    Ok(FormulaReport {
        module: m.clone(),
        depth,
        hypothesis: m.formula_hypothesis(),
        hull: weights_hull_intersection(group, m, depth)?,
        levi_shift: weights_levi_shift(rs, m, depth)?,
        decomposition: weights_integrable_decomposition(rs, m, depth)?,
    })
}
