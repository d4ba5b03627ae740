//! OFF dump of a bounded slice of a hull, for rank 2 and 3.
//!
//! The slice is the hull intersected with the box `|x_i - c_i| <= r`
//! around a center `c` (usually the highest weight). Coordinates are
//! written as decimals; the geometry itself is computed exactly.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use super::{h_to_v, HPolyhedron, Inequality};
use crate::error::{Error, Result};
use crate::rational::{dot, int, Rational};

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Intersects `h` with the box of radius `r` around `center`.
pub fn boxed(h: &HPolyhedron, center: &[Rational], r: &Rational) -> HPolyhedron {
    let n = h.dim();
    let mut ineqs = h.inequalities.clone();
    for i in 0..n {
        let mut e = vec![int(0); n];
        e[i] = int(1);
        ineqs.push(Inequality { normal: e.clone(), offset: &center[i] + r });
        ineqs.push(Inequality { normal: e.iter().map(|x| -x).collect(), offset: r - &center[i] });
    }
    HPolyhedron::new(n, h.equalities.clone(), ineqs)
}

/// Renders the boxed slice as an OFF file. Rank-2 slices are placed in the
/// plane `z = 0` as a single polygon.
pub fn to_off(h: &HPolyhedron, center: &[Rational], r: &Rational) -> Result<String> {
    let n = h.dim();
    if !(2..=3).contains(&n) {
        return Err(Error::PolyhedronCap(format!("OFF output needs rank 2 or 3, got {n}")));
    }
    let slice = boxed(h, center, r);
    let gens = h_to_v(&slice)?;
    let verts = gens.vertices();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    if n == 2 || !h.equalities.is_empty() {
        let all: Vec<usize> = (0..verts.len()).collect();
        if all.len() >= 3 {
            faces.push(cyclic_order(verts, &all, None));
        }
    } else {
        let mut seen = std::collections::BTreeSet::new();
        for ineq in &slice.inequalities {
            let on: Vec<usize> = (0..verts.len()).filter(|&i| ineq.slack(&verts[i]).is_zero()).collect();
            if on.len() >= 3 && seen.insert(on.clone()) {
                faces.push(cyclic_order(verts, &on, Some(&ineq.normal)));
            }
        }
    }
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", verts.len(), faces.len()).unwrap();
    for v in verts {
        let mut c: Vec<f64> = v.iter().map(to_f64).collect();
        c.resize(3, 0.0);
        writeln!(out, "{} {} {}", c[0], c[1], c[2]).unwrap();
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(ToString::to_string).collect();
        writeln!(out, "{} {}", f.len(), idx.join(" ")).unwrap();
    }
    Ok(out)
}

/// Orders the vertices of a planar convex polygon counterclockwise as seen
/// from the tip of `normal` (or in the xy-plane when `normal` is `None`).
fn cyclic_order(verts: &[Vec<Rational>], idx: &[usize], normal: Option<&[Rational]>) -> Vec<usize> {
    let k = Rational::from_integer(idx.len().into());
    let dim = verts[idx[0]].len();
    let centroid: Vec<Rational> =
        (0..dim).map(|d| idx.iter().map(|&i| verts[i][d].clone()).sum::<Rational>() / &k).collect();
    let rel = |i: usize| -> Vec<Rational> { verts[i].iter().zip(&centroid).map(|(a, b)| a - b).collect() };
    let u = rel(idx[0]);
    let cross = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        match normal {
            None => vec![&a[0] * &b[1] - &a[1] * &b[0]],
            Some(_) => vec![
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ],
        }
    };
    // Only the display order depends on floating point here.
    let side = |v: &[Rational]| -> Rational {
        let c = cross(&u, v);
        match normal {
            None => c[0].clone(),
            Some(nm) => dot(&c, nm),
        }
    };
    let mut keyed: Vec<(usize, f64)> = idx
        .iter()
        .map(|&i| {
            let v = rel(i);
            let s = to_f64(&side(&v));
            let c = to_f64(&dot(&u, &v));
            (i, s.atan2(c).rem_euclid(std::f64::consts::TAU))
        })
        .collect();
    keyed.sort_by(|a, b| a.1.total_cmp(&b.1));
    keyed.into_iter().map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{v_to_h, VPolyhedron};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn boxed_quadrant_is_a_square() {
        let p = VPolyhedron::new(2, vec![q(&[0, 0])], vec![q(&[-1, 0]), q(&[0, -1])]);
        let h = v_to_h(&p).unwrap();
        let off = to_off(&h, &q(&[0, 0]), &int(2)).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "4 1 0");
        assert!(lines[6].starts_with("4 "));
    }

    #[test]
    fn cube_slice_has_six_faces() {
        let p = VPolyhedron::new(3, vec![q(&[0, 0, 0])], vec![q(&[-1, 0, 0]), q(&[0, -1, 0]), q(&[0, 0, -1])]);
        let h = v_to_h(&p).unwrap();
        let off = to_off(&h, &q(&[0, 0, 0]), &int(1)).unwrap();
        assert_eq!(off.lines().nth(1), Some("8 6 0"));
    }

    #[test]
    fn rank_one_is_rejected() {
        let p = VPolyhedron::new(1, vec![q(&[0])], vec![]);
        assert!(to_off(&v_to_h(&p).unwrap(), &q(&[0]), &int(1)).is_err());
    }
}
