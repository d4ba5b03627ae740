//! Double description method over the integers.
//!
//! Given integer rows `a_1, ..., a_k`, computes a lineality basis and the
//! extreme rays of the cone `{ y : a_i . y >= 0 }`. Constraints are added one
//! at a time; adjacency of rays is decided combinatorially from their sets
//! of tight constraints.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::primitive;

#[derive(Debug, Clone, Default)]
pub struct Cone {
    pub lineality: Vec<Vec<BigInt>>,
    pub rays: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone)]
struct Ray {
    v: Vec<BigInt>,
    zero: Vec<u64>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(s: &BigInt, p: &[BigInt], t: &BigInt, q: &[BigInt]) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = p.iter().zip(q).map(|(x, y)| s * x + t * y).collect();
    primitive(&mut v);
    v
}

fn set_bit(bits: &mut [u64], k: usize) {
    bits[k / 64] |= 1 << (k % 64);
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Extreme rays and lineality of `{ y in Q^dim : rows[i] . y >= 0 }`.
pub fn cone_generators(dim: usize, rows: &[Vec<BigInt>]) -> Cone {
    let words = rows.len().div_ceil(64).max(1);
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in rows.iter().enumerate() {
        let pivot = lineality.iter().position(|l| !dot(a, l).is_zero());
        if let Some(p) = pivot {
            let mut lp = lineality.swap_remove(p);
            let mut ap = dot(a, &lp);
            if ap.is_negative() {
                lp.iter_mut().for_each(|x| *x = -x.clone());
                ap = -ap;
            }
            for l in lineality.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = combine(&ap, l, &-al, &lp);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&ap, &r.v, &-ar, &lp);
                }
                set_bit(&mut r.zero, k);
            }
            // Tight on every earlier constraint, not on this one.
            let mut zero = vec![0u64; words];
            for e in 0..k {
                set_bit(&mut zero, e);
            }
            primitive(&mut lp);
            rays.push(Ray { v: lp, zero });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    set_bit(&mut r.zero, k);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for p in &pos {
            for q in &neg {
                let common: Vec<u64> = rays[*p].zero.iter().zip(&rays[*q].zero).map(|(x, y)| x & y).collect();
                let adjacent = (0..rays.len())
                    .all(|r| r == *p || r == *q || !is_subset(&common, &rays[r].zero));
                if !adjacent {
                    continue;
                }
                let v = combine(&vals[*p], &rays[*q].v, &-&vals[*q], &rays[*p].v);
                let mut zero = common;
                set_bit(&mut zero, k);
                next.push(Ray { v, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(pos.len() + next.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                set_bit(&mut r.zero, k);
                kept.push(r);
            } else if vals[i].is_positive() {
                kept.push(r);
            }
        }
        kept.extend(next);
        rays = kept;
    }

    for l in lineality.iter_mut() {
        primitive(l);
    }
    Cone { lineality, rays: rays.into_iter().map(|r| r.v).collect() }
}
