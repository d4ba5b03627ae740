#![allow(dead_code)]

use std::sync::Arc;

use hwmod::rational::{frac, int, Rational};
use hwmod::{RootSystem, Weight, WeylGroup};
use proptest::prelude::*;

pub fn group(t: &str) -> WeylGroup {
    WeylGroup::new(Arc::new(RootSystem::from_type(t).unwrap()))
}

pub fn q(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Integers, halves and thirds in a small range: covers integral,
/// half-integral and generic coordinates.
pub fn coord() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(int),
        1 => (-7i64..=7).prop_map(|p| frac(p, 2)),
        1 => (-5i64..=5).prop_map(|p| frac(p, 3)),
    ]
}

pub fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(coord(), rank).prop_map(Weight::new)
}

pub fn dominant_integral(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(0..=max, rank).prop_map(|v| Weight::from_ints(&v))
}

/// Symmetrizer `d` with `d_i a_ij = d_j a_ji`, read off the Cartan matrix.
pub fn symmetrizer(a: &[Vec<i64>]) -> Vec<Rational> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(int(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if a[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(d[i].clone().unwrap() * int(a[i][j]) / int(a[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    d.into_iter().map(Option::unwrap).collect()
}

/// Fundamental coordinates of `lambda - sum_j k_j alpha_j`.
pub fn lower(a: &[Vec<i64>], lambda: &[Rational], k: &[i64]) -> Vec<Rational> {
    let n = a.len();
    (0..n).map(|i| &lambda[i] - int((0..n).map(|j| a[i][j] * k[j]).sum())).collect()
}

/// `(nu, beta)` for `nu` in fundamental and `beta` in root coordinates,
/// with `(alpha_j, alpha_j) = 2 d_j`.
pub fn pair(d: &[Rational], nu: &[Rational], beta: &[i64]) -> Rational {
    beta.iter().zip(nu).zip(d).map(|((&c, x), dj)| int(c) * x * dj).sum()
}
