//! Weight multiplicities of `L(lambda)` from the contravariant form on
//! `M(lambda)`.
//!
//! The vectors `f_{i_1} ... f_{i_k} v_lambda` span the weight space
//! `M(lambda)_{lambda - k}`; the rank of their Gram matrix is the dimension of
//! the image of that space in `L(lambda)`, since the radical of the form is
//! the maximal submodule. Only `[e_i, f_j] = delta_ij h_i` is used.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hwmodule::{offsets_up_to, Offset, TruncatedWeightSet};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::rootsys::{height, RootSystem, Weight};

/// Default depth cap: 8 in rank at most 2, 5 above.
pub fn default_depth_cap(rank: usize) -> u32 {
    if rank <= 2 {
        8
    } else {
        5
    }
}

/// Words `(i_1, ..., i_k)` (0-based indices) with `count(i) = k_i`, in
/// lexicographic order. The word stands for `f_{i_1} ... f_{i_k} v_lambda`.
pub fn words(offset: &[i64]) -> Vec<Vec<usize>> {
    fn rec(left: &mut [i64], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut offset.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn word_offset(w: &[usize], n: usize) -> Vec<i64> {
    let mut k = vec![0; n];
    for &i in w {
        k[i] += 1;
    }
    k
}

type WordPair = (Vec<usize>, Vec<usize>);

/// Gram-matrix computations for a fixed highest weight.
pub struct Oracle<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    cap: u32,
    memo: RefCell<HashMap<WordPair, Rational>>,
}

impl<'a> Oracle<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &Weight) -> Result<Self> {
        Self::with_cap(rs, lambda, default_depth_cap(rs.rank()))
    }

    pub fn with_cap(rs: &'a RootSystem, lambda: &Weight, cap: u32) -> Result<Self> {
        rs.check_weight(lambda)?;
        Ok(Oracle { rs, lambda: lambda.clone(), cap, memo: RefCell::new(HashMap::new()) })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// `(lambda - sum_{q} alpha_{w_q})(h_i)`.
    fn eigenvalue(&self, i: usize, w: &[usize]) -> Rational {
        let a = self.rs.cartan();
        let shift: i64 = w.iter().map(|&j| a[i][j]).sum();
        self.lambda.coord(i) - Rational::from_integer(shift.into())
    }

    /// `<f_u v, f_w v>` with `<v, v> = 1`.
    pub fn pairing_value(&self, u: &[usize], w: &[usize]) -> Rational {
        let n = self.rs.rank();
        if u.len() != w.len() || word_offset(u, n) != word_offset(w, n) {
            return Rational::zero();
        }
        self.pair(u, w)
    }

    fn pair(&self, u: &[usize], w: &[usize]) -> Rational {
        if u.is_empty() {
            return Rational::one();
        }
        let key = (u.to_vec(), w.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        // <f_i f_u' v, f_w v> = <f_u' v, e_i f_w v>, and e_i f_w v is a sum
        // over the positions of i in w.
        let i = u[0];
        let mut total = Rational::zero();
        for p in 0..w.len() {
            if w[p] != i {
                continue;
            }
            let c = self.eigenvalue(i, &w[p + 1..]);
            if c.is_zero() {
                continue;
            }
            let mut rest = w[..p].to_vec();
            rest.extend_from_slice(&w[p + 1..]);
            total += c * self.pair(&u[1..], &rest);
        }
        self.memo.borrow_mut().insert(key, total.clone());
        total
    }

    fn check_depth(&self, offset: &[i64]) -> Result<()> {
        let h = height(offset);
        if h < 0 || h > i64::from(self.cap) {
            return Err(Error::OracleDepth { depth: h.max(0) as u32, cap: self.cap });
        }
        Ok(())
    }

    pub fn gram_matrix(&self, offset: &[i64]) -> Result<GramMatrix> {
        self.rs.check_weight(&self.rs.from_int_root_coords(offset))?;
        self.check_depth(offset)?;
        let ws = words(offset);
        let entries: Vec<Vec<Rational>> =
            ws.iter().map(|u| ws.iter().map(|w| self.pairing_value(u, w)).collect()).collect();
        Ok(GramMatrix { offset: offset.to_vec(), words: ws, entries })
    }

    /// `dim L(lambda)_{lambda - offset}`.
    pub fn simple_multiplicity(&self, offset: &[i64]) -> Result<u64> {
        if offset.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        Ok(self.gram_matrix(offset)?.rank() as u64)
    }

    /// Offsets of height at most `depth` with positive multiplicity.
    pub fn weight_support(&self, depth: u32) -> Result<TruncatedWeightSet> {
        if depth > self.cap {
            return Err(Error::OracleDepth { depth, cap: self.cap });
        }
        let mut s = TruncatedWeightSet::new(self.lambda.clone(), depth);
        for k in offsets_up_to(self.rs.rank(), self.rs.index_set(), depth) {
            let m = self.simple_multiplicity(&k.0)?;
            if m > 0 {
                s.insert(k, Some(m));
            }
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub offset: Vec<i64>,
    pub words: Vec<Vec<usize>>,
    pub entries: Vec<Vec<Rational>>,
}

impl GramMatrix {
    pub fn rank(&self) -> usize {
        linalg::rank(&self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> GramJson {
        GramJson {
            offset: self.offset.clone(),
            words: self.words.iter().map(|w| w.iter().map(|i| i + 1).collect()).collect(),
            matrix: self.entries.clone(),
            rank: self.rank(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GramJson {
    pub offset: Vec<i64>,
    /// 1-based indices.
    pub words: Vec<Vec<usize>>,
    #[serde(serialize_with = "rational::ser_rational_vecs")]
    pub matrix: Vec<Vec<Rational>>,
    pub rank: usize,
}

pub fn pairing_value(rs: &RootSystem, u: &[usize], v: &[usize], lambda: &Weight) -> Result<Rational> {
    Ok(Oracle::with_cap(rs, lambda, u32::MAX)?.pairing_value(u, v))
}

pub fn simple_multiplicity(rs: &RootSystem, lambda: &Weight, offset: &[i64], cap: u32) -> Result<u64> {
    Oracle::with_cap(rs, lambda, cap)?.simple_multiplicity(offset)
}

pub fn oracle_weight_support(rs: &RootSystem, lambda: &Weight, depth: u32, cap: u32) -> Result<TruncatedWeightSet> {
    Oracle::with_cap(rs, lambda, cap)?.weight_support(depth)
}

/// Number of multisets of positive roots summing to `offset`, by direct
/// enumeration.
pub fn verma_multiplicity(rs: &RootSystem, offset: &[i64]) -> u64 {
    fn count(roots: &[Vec<i64>], from: usize, left: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), u64>) -> u64 {
        if left.iter().all(|&c| c == 0) {
            return 1;
        }
        if from == roots.len() {
            return 0;
        }
        if let Some(&c) = memo.get(&(from, left.clone())) {
            return c;
        }
        let key = (from, left.clone());
        // Either skip roots[from] for good, or use one more copy of it.
        let mut total = count(roots, from + 1, left, memo);
        let beta = &roots[from];
        if left.iter().zip(beta).all(|(l, b)| l >= b) {
            left.iter_mut().zip(beta).for_each(|(l, b)| *l -= b);
            total += count(roots, from, left, memo);
            left.iter_mut().zip(beta).for_each(|(l, b)| *l += b);
        }
        memo.insert(key, total);
        total
    }
    if offset.iter().any(|&c| c < 0) {
        return 0;
    }
    count(rs.positive_roots(), 0, &mut offset.to_vec(), &mut HashMap::new())
}

/// All `(offset, multiplicity)` pairs from the oracle up to `depth`, including
/// zeros; handy for audits.
pub fn multiplicity_table(oracle: &Oracle<'_>, depth: u32) -> Result<Vec<(Offset, u64)>> {
    offsets_up_to(oracle.rs.rank(), oracle.rs.index_set(), depth)
        .into_iter()
        .map(|k| oracle.simple_multiplicity(&k.0).map(|m| (k, m)))
        .collect()
}
