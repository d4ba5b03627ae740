//! Exact convex polyhedra for the hulls of module weights.
//!
//! All coordinates here are absolute simple-root coordinates: a weight `mu`
//! is the point `root_coords(mu)`. The Weyl group acts on these by integer
//! matrices, and every module hull lives in `lambda - cone(Phi+)`.

mod dd;
pub mod off;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hwmodule::HWModule;
use crate::linalg;
use crate::lp::LinearSystem;
use crate::rational::{self, clear_denominators, dot, int, primitive_direction, Rational};
use crate::rootsys::{IndexSet, RootSystem, Weight};
use crate::weyl::{WeylElement, WeylGroup};

pub use dd::{cone_generators, Cone};

/// Largest ambient dimension accepted by the conversions.
pub const MAX_AMBIENT_DIM: usize = 8;
/// Largest number of generators or inequalities accepted by the conversions.
pub const MAX_GENERATORS: usize = 20_000;

/// `conv(vertices) + cone(rays)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VPolyhedron {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    rays: Vec<Vec<Rational>>,
}

impl VPolyhedron {
    pub fn new(dim: usize, vertices: Vec<Vec<Rational>>, rays: Vec<Vec<Rational>>) -> Self {
        debug_assert!(vertices.iter().chain(&rays).all(|v| v.len() == dim));
        VPolyhedron { dim, vertices, rays }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn rays(&self) -> &[Vec<Rational>] {
        &self.rays
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Affine dimension.
    pub fn affine_dimension(&self) -> Option<usize> {
        let v0 = self.vertices.first()?;
        let rows: Vec<Vec<Rational>> = self
            .vertices
            .iter()
            .skip(1)
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .chain(self.rays.iter().cloned())
            .collect();
        Some(linalg::rank(&rows))
    }

    /// Applies an integer linear map (e.g. a Weyl element in root coordinates)
    /// and returns the result in sorted form. Minimality is preserved by any
    /// invertible map.
    pub fn map_int(&self, m: &[Vec<i64>]) -> VPolyhedron {
        let mut vertices: Vec<Vec<Rational>> = self.vertices.iter().map(|v| linalg::int_mat_vec(m, v)).collect();
        let mut rays: Vec<Vec<Rational>> =
            self.rays.iter().map(|r| primitive_direction(&linalg::int_mat_vec(m, r))).collect();
        vertices.sort();
        rays.sort();
        VPolyhedron { dim: self.dim, vertices, rays }
    }

    /// Minimal representation: duplicate and non-extreme vertices removed,
    /// rays scaled to primitive integer directions with redundant ones
    /// removed, both lists sorted. Redundancy is decided by exact LP.
    pub fn canonical(&self) -> Result<VPolyhedron> {
        check_caps(self.dim, self.vertices.len() + self.rays.len())?;
        let mut rays: Vec<Vec<Rational>> = self
            .rays
            .iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .map(|r| primitive_direction(r))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut i = 0;
        while i < rays.len() {
            let others: Vec<&Vec<Rational>> = rays.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, r)| r).collect();
            if in_cone(self.dim, &others, &rays[i]) {
                rays.remove(i);
            } else {
                i += 1;
            }
        }
        let mut vertices: Vec<Vec<Rational>> = self.vertices.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let ray_refs: Vec<&Vec<Rational>> = rays.iter().collect();
        let mut i = 0;
        while i < vertices.len() {
            let others: Vec<&Vec<Rational>> =
                vertices.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v).collect();
            if !others.is_empty() && in_conv_plus_cone(self.dim, &others, &ray_refs, &vertices[i]) {
                vertices.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(VPolyhedron { dim: self.dim, vertices, rays })
    }

    /// Membership test by LP (no H-representation needed).
    pub fn contains_point(&self, x: &[Rational]) -> bool {
        let v: Vec<&Vec<Rational>> = self.vertices.iter().collect();
        let r: Vec<&Vec<Rational>> = self.rays.iter().collect();
        !v.is_empty() && in_conv_plus_cone(self.dim, &v, &r, x)
    }

    pub fn to_json(&self) -> VPolyhedronJson {
        VPolyhedronJson { vertices: self.vertices.clone(), rays: self.rays.clone() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VPolyhedronJson {
    #[serde(serialize_with = "rational::ser_rational_vecs")]
    pub vertices: Vec<Vec<Rational>>,
    #[serde(serialize_with = "rational::ser_rational_vecs")]
    pub rays: Vec<Vec<Rational>>,
}

fn check_caps(dim: usize, count: usize) -> Result<()> {
    if dim > MAX_AMBIENT_DIM {
        return Err(Error::PolyhedronCap(format!("ambient dimension {dim} > {MAX_AMBIENT_DIM}")));
    }
    if count > MAX_GENERATORS {
        return Err(Error::PolyhedronCap(format!("{count} generators > {MAX_GENERATORS}")));
    }
    Ok(())
}

/// `x in cone(gens)`.
fn in_cone(dim: usize, gens: &[&Vec<Rational>], x: &[Rational]) -> bool {
    if gens.is_empty() {
        return x.iter().all(Zero::is_zero);
    }
    let mut s = LinearSystem::nonnegative(gens.len());
    for d in 0..dim {
        s.equal(gens.iter().map(|g| g[d].clone()).collect(), x[d].clone());
    }
    s.is_feasible()
}

/// `x in conv(verts) + cone(rays)`.
fn in_conv_plus_cone(dim: usize, verts: &[&Vec<Rational>], rays: &[&Vec<Rational>], x: &[Rational]) -> bool {
    let n = verts.len() + rays.len();
    let mut s = LinearSystem::nonnegative(n);
    for d in 0..dim {
        s.equal(verts.iter().chain(rays).map(|g| g[d].clone()).collect(), x[d].clone());
    }
    let mut convex = vec![Rational::one(); verts.len()];
    convex.resize(n, Rational::zero());
    s.equal(convex, Rational::one());
    s.is_feasible()
}

/// `normal . x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Inequality {
    #[serde(serialize_with = "rational::ser_rational_vec")]
    pub normal: Vec<Rational>,
    #[serde(serialize_with = "rational::ser_rational")]
    pub offset: Rational,
}

impl Inequality {
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.offset - dot(&self.normal, x)
    }
}

/// `{ x : E x = f, A x <= b }`. Equalities describe the affine hull; the
/// inequalities are the facets relative to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPolyhedron {
    #[serde(skip)]
    dim: usize,
    pub equalities: Vec<Inequality>,
    pub inequalities: Vec<Inequality>,
}

impl HPolyhedron {
    pub fn new(dim: usize, equalities: Vec<Inequality>, inequalities: Vec<Inequality>) -> Self {
        HPolyhedron { dim, equalities, inequalities }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|e| e.slack(x).is_zero()) && self.inequalities.iter().all(|i| !i.slack(x).is_negative())
    }
}

/// Row-reduces integer vectors (as rationals) into reduced echelon form;
/// returns the rows and their pivot columns.
fn rref(rows: &[Vec<BigInt>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        a[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pr = a[r].clone();
                a[i].iter_mut().zip(&pr).for_each(|(x, y)| *x -= &f * y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Reduces `v` modulo the row space of an RREF basis (zero on pivot columns),
/// then scales to a primitive integer vector.
fn reduce_mod(v: &[BigInt], basis: &[Vec<Rational>], pivots: &[usize]) -> Vec<Rational> {
    let mut x: Vec<Rational> = v.iter().map(|b| Rational::from_integer(b.clone())).collect();
    for (row, &p) in basis.iter().zip(pivots) {
        if !x[p].is_zero() {
            let f = x[p].clone();
            x.iter_mut().zip(row).for_each(|(a, b)| *a -= &f * b);
        }
    }
    if x.iter().all(Zero::is_zero) {
        return x;
    }
    primitive_direction(&x)
}

fn split(y: &[Rational], dim: usize) -> Inequality {
    Inequality { normal: y[..dim].to_vec(), offset: y[dim].clone() }
}

/// Facet description of `conv(V) + cone(R)` by double description on the
/// polar cone `{ (c, b) : c.v <= b for v in V, c.r <= 0 for r in R }`.
pub fn v_to_h(p: &VPolyhedron) -> Result<HPolyhedron> {
    let n = p.dim;
    check_caps(n, p.vertices.len() + p.rays.len())?;
    if p.vertices.is_empty() {
        // Empty set: 0 <= -1.
        return Ok(HPolyhedron::new(n, Vec::new(), vec![Inequality { normal: vec![int(0); n], offset: int(-1) }]));
    }
    let rows: Vec<Vec<BigInt>> = p
        .vertices
        .iter()
        .map(|v| {
            let mut row: Vec<Rational> = v.iter().map(|x| -x).collect();
            row.push(Rational::one());
            clear_denominators(&row)
        })
        .chain(p.rays.iter().map(|r| {
            let mut row: Vec<Rational> = r.iter().map(|x| -x).collect();
            row.push(Rational::zero());
            clear_denominators(&row)
        }))
        .collect();
    let cone = cone_generators(n + 1, &rows);
    let (lin, pivots) = rref(&cone.lineality);
    let equalities: Vec<Inequality> = lin.iter().map(|y| split(&primitive_direction(y), n)).collect();
    let mut inequalities: BTreeSet<Inequality> = BTreeSet::new();
    for ray in &cone.rays {
        let y = reduce_mod(ray, &lin, &pivots);
        if y[..n].iter().all(Zero::is_zero) {
            // 0 <= b with b > 0: the face at infinity, not a facet.
            continue;
        }
        inequalities.insert(split(&y, n));
    }
    Ok(HPolyhedron::new(n, equalities, inequalities.into_iter().collect()))
}

/// Vertices and extreme rays of a pointed H-polyhedron, in canonical
/// sorted form.
pub fn h_to_v(h: &HPolyhedron) -> Result<VPolyhedron> {
    let n = h.dim;
    check_caps(n, h.inequalities.len() + 2 * h.equalities.len())?;
    // y = (x, t), t >= 0, b t - a.x >= 0
    let row = |ineq: &Inequality, sign: i64| {
        let mut r: Vec<Rational> = ineq.normal.iter().map(|a| -a * int(sign)).collect();
        r.push(&ineq.offset * int(sign));
        clear_denominators(&r)
    };
    let mut rows = Vec::new();
    let mut t = vec![BigInt::zero(); n + 1];
    t[n] = BigInt::one();
    rows.push(t);
    for e in &h.equalities {
        rows.push(row(e, 1));
        rows.push(row(e, -1));
    }
    for i in &h.inequalities {
        rows.push(row(i, 1));
    }
    let cone = cone_generators(n + 1, &rows);
    if !cone.lineality.is_empty() {
        return Err(Error::NotPointed);
    }
    let mut vertices = BTreeSet::new();
    let mut rays = BTreeSet::new();
    for r in &cone.rays {
        let t = Rational::from_integer(r[n].clone());
        let x: Vec<Rational> = r[..n].iter().map(|b| Rational::from_integer(b.clone())).collect();
        if t.is_zero() {
            rays.insert(primitive_direction(&x));
        } else {
            vertices.insert(x.iter().map(|a| a / &t).collect::<Vec<_>>());
        }
    }
    if vertices.is_empty() {
        return Ok(VPolyhedron::new(n, Vec::new(), Vec::new()));
    }
    Ok(VPolyhedron::new(n, vertices.into_iter().collect(), rays.into_iter().collect()))
}

fn weight_point(rs: &RootSystem, w: &Weight) -> Vec<Rational> {
    rs.root_coords(w).expect("weight rank checked")
}

fn neg_root(beta: &[i64]) -> Vec<Rational> {
    beta.iter().map(|&c| int(-c)).collect()
}

/// The hull with vertices `W_J(lambda)` and rays `-(Phi+ \ Phi+_J)` for an
/// integrability set `J`; neither list is reduced.
pub fn hull_for(group: &WeylGroup, lambda: &Weight, j: IndexSet) -> Result<VPolyhedron> {
    let rs = group.root_system();
    let vertices = group.orbit(j, lambda)?.iter().map(|w| weight_point(rs, w)).collect();
    let rays = rs.positive_roots_outside(j).iter().map(|b| neg_root(b)).collect();
    Ok(VPolyhedron::new(rs.rank(), vertices, rays))
}

/// `conv wt V` as an (unreduced) V-polyhedron.
pub fn hull_of(group: &WeylGroup, m: &HWModule) -> Result<VPolyhedron> {
    hull_for(group, m.lambda(), m.integrability_set())
}

pub fn module_h_rep(group: &WeylGroup, m: &HWModule) -> Result<HPolyhedron> {
    v_to_h(&hull_of(group, m)?)
}

/// A face `conv w(wt_J V)` with every `(w, J)` label that realizes it.
#[derive(Debug, Clone)]
pub struct FaceDescriptor {
    pub labels: Vec<(WeylElement, IndexSet)>,
    pub realization: VPolyhedron,
    pub dimension: usize,
}

/// Realization of `conv wt_J V` (before applying `w`), reduced.
fn restricted_hull(group: &WeylGroup, lambda: &Weight, jv: IndexSet, j: IndexSet) -> Result<VPolyhedron> {
    let rs = group.root_system();
    let inner = j.intersection(jv);
    let vertices = group.orbit(inner, lambda)?.iter().map(|w| weight_point(rs, w)).collect();
    let rays = rs
        .positive_roots_in(j)
        .iter()
        .filter(|b| !crate::rootsys::supported_on(b, inner))
        .map(|b| neg_root(b))
        .collect();
    VPolyhedron::new(rs.rank(), vertices, rays).canonical()
}

/// All faces `conv w(wt_J V)` for `w in W_{J(V)}`, `J subset of I`,
/// deduplicated geometrically, each certified by a supporting hyperplane.
pub fn faces(group: &WeylGroup, m: &HWModule) -> Result<Vec<FaceDescriptor>> {
    let rs = group.root_system();
    let jv = m.integrability_set();
    let parent = hull_of(group, m)?.canonical()?;
    let elements = group.parabolic(jv)?;
    let mut order: Vec<VPolyhedron> = Vec::new();
    let mut labels: HashMap<VPolyhedron, Vec<(WeylElement, IndexSet)>> = HashMap::new();
    for j in rs.index_set().subsets() {
        let base = restricted_hull(group, m.lambda(), jv, j)?;
        for w in elements.iter() {
            let face = base.map_int(w.root_matrix());
            labels
                .entry(face.clone())
                .or_insert_with(|| {
                    order.push(face);
                    Vec::new()
                })
                .push((w.clone(), j));
        }
    }
    let mut out = Vec::with_capacity(order.len());
    for face in order {
        if !is_face_of(&parent, &face) {
            return Err(Error::Internal(format!("no supporting hyperplane for the face {:?}", face.to_json())));
        }
        let dimension = face.affine_dimension().unwrap_or(0);
        let labels = labels.remove(&face).unwrap();
        out.push(FaceDescriptor { labels, realization: face, dimension });
    }
    out.sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.realization.cmp(&b.realization)));
    Ok(out)
}

/// Searches for `(c, b)` with `c.x <= b` on `parent` and equality exactly on
/// `face`. Both polyhedra must be in canonical form.
pub fn supporting_hyperplane(parent: &VPolyhedron, face: &VPolyhedron) -> Option<Inequality> {
    let n = parent.dim;
    let face_v: BTreeSet<&Vec<Rational>> = face.vertices.iter().collect();
    let face_r: BTreeSet<&Vec<Rational>> = face.rays.iter().collect();
    let parent_v: BTreeSet<&Vec<Rational>> = parent.vertices.iter().collect();
    let parent_r: BTreeSet<&Vec<Rational>> = parent.rays.iter().collect();
    if !face_v.is_subset(&parent_v) || !face_r.is_subset(&parent_r) || face_v.is_empty() {
        return None;
    }
    let mut s = LinearSystem::free(n + 1);
    let row = |x: &[Rational], b: i64| {
        let mut r = x.to_vec();
        r.push(int(-b));
        r
    };
    for v in &parent.vertices {
        if face_v.contains(v) {
            s.equal(row(v, 1), int(0));
        } else {
            s.at_most(row(v, 1), int(-1));
        }
    }
    for r in &parent.rays {
        if face_r.contains(r) {
            s.equal(row(r, 0), int(0));
        } else {
            s.at_most(row(r, 0), int(-1));
        }
    }
    s.solve().map(|y| split(&y, n))
}

pub fn is_face_of(parent: &VPolyhedron, face: &VPolyhedron) -> bool {
    supporting_hyperplane(parent, face).is_some()
}

/// Faces of a pointed polyhedron read off its H-representation, as sets of
/// indices into `gens.vertices` and `gens.rays` (where `gens = h_to_v(h)`).
/// Includes the whole polyhedron; excludes the empty face.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IncidenceFace {
    pub vertices: BTreeSet<usize>,
    pub rays: BTreeSet<usize>,
}

pub fn geometric_faces(h: &HPolyhedron) -> Result<(VPolyhedron, Vec<IncidenceFace>)> {
    let gens = h_to_v(h)?;
    if gens.is_empty() {
        return Ok((gens, Vec::new()));
    }
    let facets: Vec<IncidenceFace> = h
        .inequalities
        .iter()
        .map(|ineq| IncidenceFace {
            vertices: (0..gens.vertices.len()).filter(|&i| ineq.slack(&gens.vertices[i]).is_zero()).collect(),
            rays: (0..gens.rays.len()).filter(|&i| dot(&ineq.normal, &gens.rays[i]).is_zero()).collect(),
        })
        .collect();
    let all = IncidenceFace { vertices: (0..gens.vertices.len()).collect(), rays: (0..gens.rays.len()).collect() };
    let mut seen: BTreeSet<IncidenceFace> = BTreeSet::from([all.clone()]);
    let mut stack = vec![all];
    while let Some(f) = stack.pop() {
        for facet in &facets {
            let g = IncidenceFace {
                vertices: f.vertices.intersection(&facet.vertices).copied().collect(),
                rays: f.rays.intersection(&facet.rays).copied().collect(),
            };
            if !g.vertices.is_empty() && seen.insert(g.clone()) {
                stack.push(g);
            }
        }
    }
    Ok((gens, seen.into_iter().collect()))
}

impl IncidenceFace {
    pub fn realize(&self, gens: &VPolyhedron) -> VPolyhedron {
        VPolyhedron::new(
            gens.dim,
            self.vertices.iter().map(|&i| gens.vertices[i].clone()).collect(),
            self.rays.iter().map(|&i| gens.rays[i].clone()).collect(),
        )
    }
}

/// Whether `w(wt_J V)` and `w'(wt_J' V)` have the same hull.
pub fn face_pairs_equal(
    group: &WeylGroup,
    m: &HWModule,
    (w1, j1): (&WeylElement, IndexSet),
    (w2, j2): (&WeylElement, IndexSet),
) -> Result<bool> {
    let jv = m.integrability_set();
    let a = restricted_hull(group, m.lambda(), jv, j1)?.map_int(w1.root_matrix());
    let b = restricted_hull(group, m.lambda(), jv, j2)?.map_int(w2.root_matrix());
    Ok(a == b)
}

/// Directions of the unbounded edges through the vertex `v` (a weight),
/// computed from the H-representation.
pub fn extremal_rays_at_vertex(group: &WeylGroup, m: &HWModule, v: &Weight) -> Result<Vec<Vec<Rational>>> {
    let rs = group.root_system();
    let h = module_h_rep(group, m)?;
    unbounded_edges_at(&h, &weight_point(rs, v)).ok_or_else(|| Error::NotAVertex(v.to_string()))
}

/// Unbounded edges at a vertex of an H-polyhedron, or `None` if `x` is not a
/// vertex.
pub fn unbounded_edges_at(h: &HPolyhedron, x: &[Rational]) -> Option<Vec<Vec<Rational>>> {
    let gens = h_to_v(h).ok()?;
    let vi = gens.vertices.iter().position(|v| v.as_slice() == x)?;
    let tight_v: Vec<bool> = h.inequalities.iter().map(|i| i.slack(x).is_zero()).collect();
    let mut out = Vec::new();
    for r in &gens.rays {
        let tight: Vec<&Inequality> = h
            .inequalities
            .iter()
            .zip(&tight_v)
            .filter(|(i, &t)| t && dot(&i.normal, r).is_zero())
            .map(|(i, _)| i)
            .collect();
        let verts = gens.vertices.iter().enumerate().filter(|(_, v)| tight.iter().all(|i| i.slack(v).is_zero()));
        let rays = gens.rays.iter().filter(|s| tight.iter().all(|i| dot(&i.normal, s).is_zero()));
        let only_v = verts.map(|(k, _)| k).eq(std::iter::once(vi));
        if only_v && rays.count() == 1 {
            out.push(r.clone());
        }
    }
    Some(out)
}

/// Result of comparing the stabilizer of a hull with parabolic subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    /// Size of the full setwise stabilizer.
    pub order: usize,
    /// Largest `J` with `W_J` inside the stabilizer.
    pub largest_parabolic: IndexSet,
    /// Whether the stabilizer is exactly `W_J` for that `J`.
    pub is_parabolic: bool,
}

pub fn stabilizer_of(group: &WeylGroup, p: &VPolyhedron) -> Result<StabilizerReport> {
    let stab = group.polyhedron_stabilizer(p)?;
    let j = group.simple_reflections_in(&stab);
    let wj = group.parabolic(j)?;
    Ok(StabilizerReport { order: stab.len(), largest_parabolic: j, is_parabolic: wj.len() == stab.len() })
}

/// The stabilizer of `conv wt V` in `W`, compared against parabolics.
pub fn weyl_stabilizer_is(group: &WeylGroup, m: &HWModule) -> Result<StabilizerReport> {
    stabilizer_of(group, &hull_of(group, m)?)
}

/// Serialized polyhedron: V- and H-representation together.
#[derive(Debug, Clone, Serialize)]
pub struct PolyhedronJson {
    pub basis: &'static str,
    #[serde(serialize_with = "rational::ser_rational_vecs")]
    pub vertices: Vec<Vec<Rational>>,
    #[serde(serialize_with = "rational::ser_rational_vecs")]
    pub rays: Vec<Vec<Rational>>,
    pub inequalities: Vec<Inequality>,
    pub equalities: Vec<Inequality>,
}

pub fn polyhedron_json(v: &VPolyhedron, h: &HPolyhedron) -> PolyhedronJson {
    PolyhedronJson {
        basis: "simple_roots",
        vertices: v.vertices.clone(),
        rays: v.rays.clone(),
        inequalities: h.inequalities.clone(),
        equalities: h.equalities.clone(),
    }
}

/// Sorted canonical form, also used as a map key.
pub fn canonical_key(p: &VPolyhedron) -> Result<VPolyhedron> {
    p.canonical()
}

pub fn face_counts_by_dimension(faces: &[FaceDescriptor]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for f in faces {
        *m.entry(f.dimension).or_insert(0) += 1;
    }
    m
}
