//! Root data for semisimple types: Cartan matrices, positive roots, the
//! invariant form, fundamental weights, and exact weight arithmetic.
//!
//! Conventions (Bourbaki labelling):
//! * `cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`,
//!   so column `j` of the Cartan matrix is `alpha_j` in the fundamental basis.
//! * Long roots have `(alpha, alpha) = 2` in every simple component.
//! * Indices are 0-based in the API; text and JSON output is 1-based.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_is_legal(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C | Family::D => n >= 2,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

/// A semisimple type as a list of simple components, e.g. `A1xB2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    components: Vec<(Family, usize)>,
}

impl RootSystemSpec {
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidRootSystem("no components".into()));
        }
        for &(f, n) in &components {
            if !f.rank_is_legal(n) {
                return Err(Error::InvalidRootSystem(format!("{}{} is not a valid type", f.letter(), n)));
            }
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for part in s.trim().split(['x', 'X']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| Error::Parse(format!("empty component in {s:?}")))?;
            let family = match letter.to_ascii_uppercase() {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => return Err(Error::Parse(format!("unknown family {letter:?} in {s:?}"))),
            };
            let n: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in component {part:?}")))?;
            comps.push((family, n));
        }
        Self::new(comps)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|(fam, n)| format!("{}{}", fam.letter(), n)).collect();
        f.write_str(&parts.join("x"))
    }
}

/// A subset of the simple-root index set `I`, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const fn empty() -> Self {
        IndexSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// All subsets, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(IndexSet(cur))
        })
    }

    /// 1-based indices, for output.
    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Parses `"1,3"` (1-based, empty string for the empty set).
    pub fn parse_one_based(s: &str, rank: usize) -> Result<Self> {
        let mut set = IndexSet::empty();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part.parse().map_err(|_| Error::Parse(format!("bad index {part:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            set.insert(i - 1);
        }
        Ok(set)
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = IndexSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

/// A weight, stored by its fundamental-basis coordinates `lambda(h_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, q: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * q).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn parse(s: &str) -> Result<Weight> {
        Ok(Weight(rational::parse_rational_list(s)?))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", rational::fmt_vector(&self.0))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::ser_rational_vec(&self.0, s)
    }
}

/// Immutable root datum of a semisimple Lie algebra.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rational>>,
    /// `(alpha_i, alpha_i) / 2`.
    half_norms: Vec<Rational>,
    form: Vec<Vec<Rational>>,
    positive_roots: Vec<Vec<i64>>,
}

fn component_cartan(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C | Family::F => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n.saturating_sub(3) {
                link(i, i + 1);
            }
            if n >= 3 {
                link(n - 3, n - 2);
                link(n - 3, n - 1);
            }
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 attached to 4 (1-based).
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::G => link(0, 1),
    }
    match family {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// `(alpha_i, alpha_i) / 2` for one connected component, long roots at 1.
fn component_half_norms(a: &[Vec<i64>]) -> Vec<Rational> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(int(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                // d_i a_ij = d_j a_ji
                let dj = d[i].clone().unwrap() * int(a[i][j]) / int(a[j][i]);
                d[j] = Some(dj);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let max = d.iter().max().unwrap().clone();
    d.into_iter().map(|x| x / &max).collect()
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Self {
        let n = spec.rank();
        let mut cartan = vec![vec![0i64; n]; n];
        let mut half_norms = Vec::with_capacity(n);
        let mut off = 0;
        for &(family, r) in spec.components() {
            if family == Family::D && r == 2 {
                // D2 = A1 x A1
                cartan[off][off] = 2;
                cartan[off + 1][off + 1] = 2;
                half_norms.extend([int(1), int(1)]);
            } else {
                let a = component_cartan(family, r);
                for i in 0..r {
                    for j in 0..r {
                        cartan[off + i][off + j] = a[i][j];
                    }
                }
                half_norms.extend(component_half_norms(&a));
            }
            off += r;
        }
        let form = (0..n)
            .map(|i| (0..n).map(|j| &half_norms[i] * int(cartan[i][j])).collect())
            .collect();
        let q_cartan: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let cartan_inv = linalg::inverse(&q_cartan).expect("Cartan matrix of a semisimple type is invertible");
        let positive_roots = closure_positive_roots(&cartan);
        RootSystem { spec, cartan, cartan_inv, half_norms, form, positive_roots }
    }

    pub fn from_type(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn index_set(&self) -> IndexSet {
        IndexSet::full(self.rank())
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The symmetrized form `B_ij = (alpha_i, alpha_j)`.
    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// by reverse lexicographic order (so the simple roots come first, in order).
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots supported on `j` (the roots of the Levi factor).
    pub fn positive_roots_in(&self, j: IndexSet) -> Vec<Vec<i64>> {
        self.positive_roots.iter().filter(|b| supported_on(b, j)).cloned().collect()
    }

    /// Positive roots not supported on `j`.
    pub fn positive_roots_outside(&self, j: IndexSet) -> Vec<Vec<i64>> {
        self.positive_roots.iter().filter(|b| !supported_on(b, j)).cloned().collect()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: w.rank() });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// `lambda(h_i)`, which is the i-th fundamental coordinate.
    pub fn eval_coroot(&self, lambda: &Weight, i: usize) -> Result<Rational> {
        self.check_weight(lambda)?;
        self.check_index(i)?;
        Ok(lambda.coord(i).clone())
    }

    /// The invariant form `(mu, nu)`.
    pub fn bilinear(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_weight(mu)?;
        self.check_weight(nu)?;
        // (mu, alpha_j) = mu(h_j) (alpha_j, alpha_j)/2
        let c = self.root_coords(nu)?;
        Ok((0..self.rank()).fold(Rational::zero(), |acc, j| acc + &c[j] * mu.coord(j) * &self.half_norms[j]))
    }

    /// Coordinates in the simple-root basis. Every weight of a semisimple
    /// type lies in the rational span of the simple roots, so this only
    /// fails on a rank mismatch.
    pub fn root_coords(&self, mu: &Weight) -> Result<Vec<Rational>> {
        self.check_weight(mu)?;
        Ok(linalg::mat_vec(&self.cartan_inv, mu.coords()))
    }

    pub fn from_root_coords(&self, c: &[Rational]) -> Weight {
        Weight(linalg::int_mat_vec(&self.cartan, c))
    }

    pub fn from_int_root_coords(&self, c: &[i64]) -> Weight {
        Weight((0..self.rank()).map(|i| int((0..self.rank()).map(|j| self.cartan[i][j] * c[j]).sum())).collect())
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| int(self.cartan[k][i])).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| int(i64::from(k == i))).collect())
    }

    /// `rho_J`, the sum of the fundamental weights indexed by `J`.
    pub fn rho(&self, j: IndexSet) -> Weight {
        Weight((0..self.rank()).map(|k| int(i64::from(j.contains(k)))).collect())
    }

    /// `lambda - sum k_i alpha_i`.
    pub fn lower(&self, lambda: &Weight, offset: &[i64]) -> Weight {
        lambda.sub(&self.from_int_root_coords(offset))
    }

    /// `<beta, alpha_i^vee>` for a root-lattice element in root coordinates.
    pub fn pairing_root(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| self.cartan[i][j] * beta[j]).sum()
    }

    /// Partial order: `mu <= lambda` iff `lambda - mu` is a nonnegative integer
    /// combination of simple roots.
    pub fn leq(&self, mu: &Weight, lambda: &Weight) -> Result<bool> {
        let c = self.root_coords(&lambda.sub(mu))?;
        Ok(c.iter().all(rational::is_nonneg_integer))
    }

    /// `lambda - mu` as a nonnegative integer offset, if `mu <= lambda`.
    pub fn offset_between(&self, lambda: &Weight, mu: &Weight) -> Result<Option<Vec<i64>>> {
        let c = self.root_coords(&lambda.sub(mu))?;
        if c.iter().all(rational::is_nonneg_integer) {
            Ok(Some(c.iter().map(|q| rational::to_i64(q).expect("small offset")).collect()))
        } else {
            Ok(None)
        }
    }

    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson {
            r#type: self.spec.to_string(),
            rank: self.rank(),
            cartan: self.cartan.clone(),
            positive_roots: self.positive_roots.clone(),
            form: self.form.iter().map(|r| r.iter().map(rational::fmt_rational).collect()).collect(),
        }
    }
}

/// Serialized form of a [`RootSystem`].
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemJson {
    pub r#type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub form: Vec<Vec<String>>,
}

pub fn supported_on(beta: &[i64], j: IndexSet) -> bool {
    beta.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i))
}

pub fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

fn closure_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
            let mut r = beta.clone();
            r[i] -= p;
            if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    roots
}

/// Weyl-vector check helper: `sum of positive roots` in the fundamental basis.
pub fn sum_positive_roots(rs: &RootSystem) -> Weight {
    let n = rs.rank();
    let mut total = vec![0i64; n];
    for b in rs.positive_roots() {
        for (t, c) in total.iter_mut().zip(b) {
            *t += c;
        }
    }
    rs.from_int_root_coords(&total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s).unwrap()
    }

    #[test]
    fn a2_data() {
        let a2 = rs("A2");
        assert_eq!(a2.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.form()[0][1], int(-1));
    }

    #[test]
    fn a1_normalized() {
        let a1 = rs("a1");
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        let al = a1.simple_root(0);
        assert_eq!(a1.bilinear(&al, &al).unwrap(), int(2));
    }

    /// Closure of the simple roots under simple reflections, computed
    /// independently by iterating reflections on the full root set until it
    /// stabilizes.
    fn brute_roots(cartan: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let n = cartan.len();
        let mut all: BTreeSet<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        loop {
            let mut next = all.clone();
            for b in &all {
                for i in 0..n {
                    let p: i64 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
                    let mut r = b.clone();
                    r[i] -= p;
                    next.insert(r);
                }
            }
            if next.len() == all.len() {
                return all.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect();
            }
            all = next;
        }
    }

    #[test]
    fn g2_highest_root() {
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.positive_roots().last().unwrap(), &vec![3, 2]);
        let brute = brute_roots(g2.cartan());
        assert_eq!(brute, g2.positive_roots().iter().cloned().collect());
        // alpha_1 short
        assert_eq!(g2.form()[0][0], frac(2, 3));
        assert_eq!(g2.form()[1][1], int(2));
    }

    #[test]
    fn classical_counts() {
        for (t, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A5", 15),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("B4", 16),
            ("D4", 12),
            ("D2", 2),
            ("D3", 6),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
            ("A2xB2", 7),
        ] {
            let r = rs(t);
            assert_eq!(r.positive_roots().len(), count, "{t}");
            assert_eq!(brute_roots(r.cartan()).len(), count, "{t}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for t in ["A0", "B1", "E5", "E9", "F3", "G3", "Q2", "", "Ax"] {
            assert!(RootSystem::from_type(t).is_err(), "{t}");
        }
    }

    #[test]
    fn spec_display_round_trip() {
        let s: RootSystemSpec = "a1xb2".parse().unwrap();
        assert_eq!(s.to_string(), "A1xB2");
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn eval_coroot_examples() {
        let a2 = rs("A2");
        let w1 = a2.fundamental_weight(0);
        assert_eq!(a2.eval_coroot(&w1, 0).unwrap(), int(1));
        assert_eq!(a2.eval_coroot(&w1, 1).unwrap(), int(0));
        assert_eq!(a2.eval_coroot(&a2.simple_root(0), 1).unwrap(), int(-1));
        assert!(a2.eval_coroot(&w1, 2).is_err());
    }

    #[test]
    fn bilinear_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.bilinear(&a2.simple_root(0), &a2.simple_root(1)).unwrap(), int(-1));
        assert_eq!(a2.bilinear(&a2.fundamental_weight(0), &a2.simple_root(1)).unwrap(), int(0));
        assert!(a2.bilinear(&Weight::from_ints(&[1]), &a2.simple_root(1)).is_err());
    }

    #[test]
    fn root_coords_examples() {
        let a2 = rs("A2");
        let s = a2.simple_root(0).add(&a2.simple_root(1));
        assert_eq!(a2.root_coords(&s).unwrap(), vec![int(1), int(1)]);
        assert_eq!(a2.root_coords(&a2.fundamental_weight(0)).unwrap(), vec![frac(2, 3), frac(1, 3)]);
        let a1 = rs("A1");
        assert_eq!(a1.root_coords(&a1.fundamental_weight(0)).unwrap(), vec![frac(1, 2)]);
    }

    #[test]
    fn rho_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.rho(IndexSet::empty()), Weight::zero(2));
        assert_eq!(a2.rho(a2.index_set()), Weight::from_ints(&[1, 1]));
        let b2 = rs("B2");
        assert_eq!(b2.rho(IndexSet::empty().with(0)), Weight::from_ints(&[1, 0]));
    }

    #[test]
    fn index_set_subsets() {
        let s = IndexSet::from_iter([0, 2]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(IndexSet::empty().subsets().count(), 1);
        assert_eq!(IndexSet::parse_one_based("1,3", 3).unwrap(), s);
        assert!(IndexSet::parse_one_based("4", 3).is_err());
        assert_eq!(s.to_string(), "{1,3}");
    }

    const TYPES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1", "A1xG2"];

    #[test]
    fn crystallographic_and_symmetrizable() {
        for t in TYPES {
            let r = rs(t);
            let n = r.rank();
            for i in 0..n {
                assert!(r.form()[i][i] > Rational::zero());
                for j in 0..n {
                    assert_eq!(r.form()[i][j], r.form()[j][i]);
                }
            }
            for b in r.positive_roots() {
                let bw = r.from_int_root_coords(b);
                for i in 0..n {
                    let ai = r.simple_root(i);
                    let v = int(2) * r.bilinear(&bw, &ai).unwrap() / r.bilinear(&ai, &ai).unwrap();
                    assert!(v.is_integer(), "{t}");
                }
            }
        }
    }

    #[test]
    fn sum_of_positive_roots_is_two_rho() {
        for t in TYPES {
            let r = rs(t);
            assert_eq!(sum_positive_roots(&r), r.rho(r.index_set()).scale(&int(2)), "{t}");
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #[test]
        fn root_coords_round_trip(c in proptest::collection::vec(small_rational(), 3)) {
            let r = rs("B3");
            let w = r.from_root_coords(&c);
            prop_assert_eq!(r.root_coords(&w).unwrap(), c);
        }

        #[test]
        fn coroot_matches_form(c in proptest::collection::vec(small_rational(), 2), i in 0usize..2) {
            for t in ["A2", "B2", "G2"] {
                let r = rs(t);
                let lam = Weight::new(c.clone());
                let ai = r.simple_root(i);
                let via_form = int(2) * r.bilinear(&lam, &ai).unwrap() / r.bilinear(&ai, &ai).unwrap();
                prop_assert_eq!(r.eval_coroot(&lam, i).unwrap(), via_form);
            }
        }

        #[test]
        fn bilinear_is_symmetric(a in proptest::collection::vec(small_rational(), 2), b in proptest::collection::vec(small_rational(), 2)) {
            let r = rs("G2");
            let (x, y) = (Weight::new(a), Weight::new(b));
            prop_assert_eq!(r.bilinear(&x, &y).unwrap(), r.bilinear(&y, &x).unwrap());
        }
    }
}
