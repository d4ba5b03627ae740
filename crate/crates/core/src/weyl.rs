//! Weyl groups and their parabolic subgroups: enumeration, the linear and
//! dot actions, orbits, the set `S_lambda`, and setwise stabilizers.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{identity, int_mat_mul, int_mat_vec};
use crate::polyhedron::VPolyhedron;
use crate::rational::{primitive_direction, Rational};
use crate::rootsys::{IndexSet, RootSystem, Weight};

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// An element of `W`, carrying a shortest word and its action matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// `s_{w[0]} s_{w[1]} ... s_{w[k-1]}`, 0-based indices.
    word: Vec<usize>,
    /// Action on fundamental-basis coordinates.
    fund: Vec<Vec<i64>>,
    /// Action on simple-root coordinates.
    root: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { word: Vec::new(), fund: identity(rank), root: identity(rank) }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Length of the element. Words produced by enumeration are reduced.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.fund == identity(self.fund.len())
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.fund
    }

    pub fn root_matrix(&self) -> &[Vec<i64>] {
        &self.root
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, mu: &Weight) -> Weight {
        Weight::new(int_mat_vec(&self.fund, mu.coords()))
    }

    pub fn act_root_coords(&self, c: &[Rational]) -> Vec<Rational> {
        int_mat_vec(&self.root, c)
    }

    pub fn act_root_int(&self, c: &[i64]) -> Vec<i64> {
        self.root.iter().map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word, fund: int_mat_mul(&self.fund, &other.fund), root: int_mat_mul(&self.root, &other.root) }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join("."))
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn simple_reflection_matrices(rs: &RootSystem, i: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = rs.rank();
    let a = rs.cartan();
    // (s_i mu)_k = mu_k - mu_i a_ki
    let fund = (0..n)
        .map(|k| (0..n).map(|l| i64::from(k == l) - if l == i { a[k][i] } else { 0 }).collect())
        .collect();
    // (s_i c)_k = c_k - delta_ki sum_l a_il c_l
    let root = (0..n)
        .map(|k| (0..n).map(|l| i64::from(k == l) - if k == i { a[i][l] } else { 0 }).collect())
        .collect();
    (fund, root)
}

type Matrix = Vec<Vec<i64>>;

/// The Weyl group of a root system, with a synchronized cache of parabolic
/// subgroup enumerations.
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    cap: usize,
    gens: Vec<(Matrix, Matrix)>,
    cache: Mutex<HashMap<IndexSet, Arc<Vec<WeylElement>>>>,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Self::with_cap(rs, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(rs: Arc<RootSystem>, cap: usize) -> Self {
        let gens = (0..rs.rank()).map(|i| simple_reflection_matrices(&rs, i)).collect();
        WeylGroup { rs, cap, gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let (fund, root) = self.gens[i].clone();
        WeylElement { word: vec![i], fund, root }
    }

    /// `s_i mu = mu - mu(h_i) alpha_i`.
    pub fn reflect(&self, i: usize, mu: &Weight) -> Result<Weight> {
        let c = self.rs.eval_coroot(mu, i)?;
        Ok(mu.sub(&self.rs.simple_root(i).scale(&c)))
    }

    /// All elements of `W_J`, ordered by length and then by lexicographically
    /// smallest reduced word.
    pub fn parabolic(&self, j: IndexSet) -> Result<Arc<Vec<WeylElement>>> {
        if !j.is_subset(self.rs.index_set()) {
            return Err(Error::IndexOutOfRange { index: j.iter().last().unwrap_or(0), rank: self.rank() });
        }
        if let Some(hit) = self.cache.lock().unwrap().get(&j) {
            return Ok(Arc::clone(hit));
        }
        let elems = Arc::new(self.enumerate(j)?);
        self.cache.lock().unwrap().insert(j, Arc::clone(&elems));
        Ok(elems)
    }

    pub fn full(&self) -> Result<Arc<Vec<WeylElement>>> {
        self.parabolic(self.rs.index_set())
    }

    fn enumerate(&self, j: IndexSet) -> Result<Vec<WeylElement>> {
        let id = WeylElement::identity(self.rank());
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([id.fund.clone()]);
        let mut out = vec![id];
        let mut frontier_start = 0;
        // Breadth first; parents are visited in order and generators in
        // increasing index, so the first word found is the lexicographically
        // smallest reduced word.
        while frontier_start < out.len() {
            let frontier_end = out.len();
            for p in frontier_start..frontier_end {
                for i in j.iter() {
                    let (gf, gr) = &self.gens[i];
                    let fund = int_mat_mul(&out[p].fund, gf);
                    if seen.contains(&fund) {
                        continue;
                    }
                    if out.len() >= self.cap {
                        return Err(Error::EnumerationCap { cap: self.cap });
                    }
                    seen.insert(fund.clone());
                    let mut word = out[p].word.clone();
                    word.push(i);
                    let root = int_mat_mul(&out[p].root, gr);
                    out.push(WeylElement { word, fund, root });
                }
            }
            frontier_start = frontier_end;
        }
        Ok(out)
    }

    /// `W_J (lambda)`, deduplicated, in element order.
    pub fn orbit(&self, j: IndexSet, lambda: &Weight) -> Result<Vec<Weight>> {
        self.rs.check_weight(lambda)?;
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for w in self.parabolic(j)?.iter() {
            let x = w.act(lambda);
            if seen.insert(x.clone()) {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        let rho = self.rs.rho(self.rs.index_set());
        w.act(&lambda.add(&rho)).sub(&rho)
    }

    /// `{w in W : w . lambda <= lambda}`, in element order.
    pub fn s_lambda_set(&self, lambda: &Weight) -> Result<Vec<WeylElement>> {
        self.rs.check_weight(lambda)?;
        let mut out = Vec::new();
        for w in self.full()?.iter() {
            if self.rs.leq(&self.dot_action(w, lambda), lambda)? {
                out.push(w.clone());
            }
        }
        Ok(out)
    }

    /// The weights `{w . lambda : w . lambda <= lambda}`, deduplicated.
    pub fn s_lambda_weights(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        let mut seen = HashSet::new();
        Ok(self
            .s_lambda_set(lambda)?
            .iter()
            .map(|w| self.dot_action(w, lambda))
            .filter(|x| seen.insert(x.clone()))
            .collect())
    }

    /// Whether `S_lambda = W_{J_lambda}` as sets of group elements.
    pub fn wcf_condition_holds(&self, lambda: &Weight) -> Result<bool> {
        let s: BTreeSet<Vec<Vec<i64>>> = self.s_lambda_set(lambda)?.into_iter().map(|w| w.fund).collect();
        let jl = crate::hwmodule::j_lambda(lambda);
        let wj: BTreeSet<Vec<Vec<i64>>> = self.parabolic(jl)?.iter().map(|w| w.fund.clone()).collect();
        Ok(s == wj)
    }

    /// `{w : w(S) = S}` for a finite set of weights.
    pub fn setwise_stabilizer(&self, points: &[Weight]) -> Result<Vec<WeylElement>> {
        let set: HashSet<&Weight> = points.iter().collect();
        let mut out = Vec::new();
        for w in self.full()?.iter() {
            if points.iter().all(|p| set.contains(&w.act(p))) {
                out.push(w.clone());
            }
        }
        Ok(out)
    }

    /// Elements mapping a polyhedron (in root coordinates) onto itself. The
    /// polyhedron is reduced first, so its vertices and extreme rays are
    /// intrinsic.
    pub fn polyhedron_stabilizer(&self, p: &VPolyhedron) -> Result<Vec<WeylElement>> {
        let p = p.canonical()?;
        let verts: HashSet<&Vec<Rational>> = p.vertices().iter().collect();
        let rays: HashSet<&Vec<Rational>> = p.rays().iter().collect();
        let mut out = Vec::new();
        for w in self.full()?.iter() {
            let ok_v = p.vertices().iter().all(|v| verts.contains(&w.act_root_coords(v)));
            let ok_r = ok_v && p.rays().iter().all(|r| rays.contains(&primitive_direction(&w.act_root_coords(r))));
            if ok_v && ok_r {
                out.push(w.clone());
            }
        }
        Ok(out)
    }

    /// `{i : s_i in H}` for a subgroup `H` given by its elements.
    pub fn simple_reflections_in(&self, h: &[WeylElement]) -> IndexSet {
        let mats: HashSet<&Vec<Vec<i64>>> = h.iter().map(|w| &w.fund).collect();
        (0..self.rank()).filter(|&i| mats.contains(&self.gens[i].0)).collect()
    }
}

/// Whether two element lists describe the same subset of `W`.
pub fn same_elements(a: &[WeylElement], b: &[WeylElement]) -> bool {
    let sa: HashSet<&Vec<Vec<i64>>> = a.iter().map(|w| &w.fund).collect();
    let sb: HashSet<&Vec<Vec<i64>>> = b.iter().map(|w| &w.fund).collect();
    sa == sb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(Arc::new(RootSystem::from_type(t).unwrap()))
    }

    #[test]
    fn reflect_examples() {
        let a1 = group("A1");
        assert_eq!(a1.reflect(0, &Weight::from_ints(&[1])).unwrap(), Weight::from_ints(&[-1]));
        let a2 = group("A2");
        let rs = a2.root_system();
        assert_eq!(a2.reflect(0, &rs.fundamental_weight(1)).unwrap(), rs.fundamental_weight(1));
        assert_eq!(a2.reflect(0, &rs.simple_root(1)).unwrap(), rs.simple_root(0).add(&rs.simple_root(1)));
    }

    #[test]
    fn group_orders() {
        for (t, order, max_len) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("B3", 48, 9),
            ("G2", 12, 6),
            ("D4", 192, 12),
            ("F4", 1152, 24),
            ("A1xA1", 4, 2),
        ] {
            let g = group(t);
            let w = g.full().unwrap();
            assert_eq!(w.len(), order, "{t}");
            assert_eq!(w.iter().map(WeylElement::length).max().unwrap(), max_len, "{t}");
        }
    }

    #[test]
    fn trivial_parabolic() {
        let g = group("B3");
        let w = g.parabolic(IndexSet::empty()).unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0].is_identity());
        assert_eq!(w[0].to_string(), "e");
        // J of type A2 inside B3
        assert_eq!(g.parabolic(IndexSet::from_iter([0, 1])).unwrap().len(), 6);
        // J of type B2 inside B3
        assert_eq!(g.parabolic(IndexSet::from_iter([1, 2])).unwrap().len(), 8);
    }

    #[test]
    fn enumeration_order_is_shortlex() {
        let g = group("A2");
        let words: Vec<String> = g.full().unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["e", "s1", "s2", "s1.s2", "s2.s1", "s1.s2.s1"]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = WeylGroup::with_cap(Arc::new(RootSystem::from_type("A3").unwrap()), 10);
        assert_eq!(g.full().unwrap_err(), Error::EnumerationCap { cap: 10 });
    }

    #[test]
    fn length_is_inversion_count() {
        for t in ["A3", "B3", "G2", "A1xA1"] {
            let g = group(t);
            let rs = g.root_system();
            let pos: HashSet<&Vec<i64>> = rs.positive_roots().iter().collect();
            for w in g.full().unwrap().iter() {
                let mut inv = 0;
                for b in rs.positive_roots() {
                    let img = w.act_root_int(b);
                    let neg: Vec<i64> = img.iter().map(|x| -x).collect();
                    if pos.contains(&img) {
                        continue;
                    }
                    assert!(pos.contains(&neg), "{t}: w does not permute roots");
                    inv += 1;
                }
                assert_eq!(inv, w.length(), "{t} {w}");
            }
        }
    }

    #[test]
    fn root_and_fundamental_actions_agree() {
        let g = group("B3");
        let rs = g.root_system();
        let lam = Weight::new(vec![frac(1, 2), int(-2), frac(5, 3)]);
        for w in g.full().unwrap().iter() {
            let c = rs.root_coords(&lam).unwrap();
            assert_eq!(rs.from_root_coords(&w.act_root_coords(&c)), w.act(&lam));
        }
    }

    #[test]
    fn orbit_examples() {
        let g = group("A2");
        let all = g.root_system().index_set();
        assert_eq!(g.orbit(all, &Weight::from_ints(&[1, 1])).unwrap().len(), 6);
        assert_eq!(g.orbit(all, &Weight::zero(2)).unwrap(), vec![Weight::zero(2)]);
        let w2 = Weight::from_ints(&[0, 1]);
        assert_eq!(g.orbit(IndexSet::from_iter([0]), &w2).unwrap(), vec![w2]);
    }

    #[test]
    fn dot_action_examples() {
        let g = group("A1");
        let s = g.simple_reflection(0);
        let id = WeylElement::identity(1);
        let lam = Weight::new(vec![frac(7, 3)]);
        assert_eq!(g.dot_action(&id, &lam), lam);
        // s . lambda = lambda - (m + 1) alpha
        let alpha = g.root_system().simple_root(0);
        assert_eq!(g.dot_action(&s, &lam), lam.sub(&alpha.scale(&frac(10, 3))));
        let wall = Weight::from_ints(&[-1]);
        assert_eq!(g.dot_action(&s, &wall), wall);
    }

    #[test]
    fn s_lambda_examples() {
        let a1 = group("A1");
        let s = a1.s_lambda_set(&Weight::new(vec![frac(-1, 2)])).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_identity());
        let s = a1.s_lambda_set(&Weight::new(vec![frac(1, 2)])).unwrap();
        assert_eq!(s.len(), 1);
        let a2 = group("A2");
        assert_eq!(a2.s_lambda_set(&Weight::from_ints(&[1, 1])).unwrap().len(), 6);
    }

    #[test]
    fn wcf_condition_examples() {
        let a2 = group("A2");
        assert!(a2.wcf_condition_holds(&Weight::from_ints(&[2, 1])).unwrap());
        let a1 = group("A1");
        assert!(a1.wcf_condition_holds(&Weight::new(vec![frac(-3, 2)])).unwrap());
        // -rho: every w fixes it under the dot action, but J_lambda is empty.
        let minus_rho = Weight::from_ints(&[-1, -1]);
        assert_eq!(a2.s_lambda_set(&minus_rho).unwrap().len(), 6);
        assert_eq!(a2.s_lambda_weights(&minus_rho).unwrap(), vec![minus_rho.clone()]);
        assert!(!a2.wcf_condition_holds(&minus_rho).unwrap());
    }

    #[test]
    fn stabilizer_examples() {
        let g = group("A2");
        let orbit = g.orbit(g.root_system().index_set(), &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(g.setwise_stabilizer(&orbit).unwrap().len(), 6);
        let single = [Weight::from_ints(&[1, 1])];
        let st = g.setwise_stabilizer(&single).unwrap();
        assert_eq!(st.len(), 1);
        assert!(st[0].is_identity());
        assert_eq!(g.simple_reflections_in(&g.full().unwrap()), g.root_system().index_set());
    }

    #[test]
    fn dominant_orbit_stabilizer_is_everything() {
        for (t, lam) in [("B2", vec![1, 2]), ("G2", vec![1, 1]), ("A3", vec![1, 1, 2])] {
            let g = group(t);
            let orbit = g.orbit(g.root_system().index_set(), &Weight::from_ints(&lam)).unwrap();
            assert_eq!(g.setwise_stabilizer(&orbit).unwrap().len(), g.full().unwrap().len());
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=3).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #[test]
        fn dot_action_is_an_action(c in proptest::collection::vec(small_rational(), 2), a in 0usize..8, b in 0usize..8) {
            let g = group("B2");
            let w = g.full().unwrap();
            let (x, y) = (&w[a], &w[b]);
            let lam = Weight::new(c);
            prop_assert_eq!(g.dot_action(&x.compose(y), &lam), g.dot_action(x, &g.dot_action(y, &lam)));
        }

        #[test]
        fn orbit_size_divides_order(c in proptest::collection::vec(-2i64..=2, 2)) {
            let g = group("G2");
            let lam = Weight::from_ints(&c);
            let all = g.root_system().index_set();
            let orbit = g.orbit(all, &lam).unwrap();
            let order = g.full().unwrap().len();
            let point_stab = g.full().unwrap().iter().filter(|w| w.act(&lam) == lam).count();
            prop_assert_eq!(orbit.len() * point_stab, order);
        }
    }
}
