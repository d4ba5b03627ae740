//! Truncated formal characters.
//!
//! A character `sum_k c_k e^{lambda - k}` is stored by offset `k` from its
//! base weight. Verma characters come from the Kostant partition function;
//! simple characters from the alternating sum of Verma characters over
//! `W_{J_lambda}` when `S_lambda = W_{J_lambda}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hwmodule::{j_lambda, offsets_up_to, Offset, TruncatedWeightSet, WeightSetJson};
use crate::rational::Rational;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    lambda: Weight,
    depth: u32,
    coeffs: BTreeMap<Offset, i64>,
}

impl FormalCharacter {
    pub fn new(lambda: Weight, depth: u32) -> Self {
        FormalCharacter { lambda, depth, coeffs: BTreeMap::new() }
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Coefficient at offset `k` (zero when absent).
    pub fn coeff(&self, k: &Offset) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Adds `c` at `k`; offsets above the depth are dropped.
    pub fn add(&mut self, k: Offset, c: i64) {
        if c == 0 || k.height() > i64::from(self.depth) {
            return;
        }
        let e = self.coeffs.entry(k.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    /// Nonzero terms in offset order.
    pub fn terms(&self) -> impl Iterator<Item = (&Offset, &i64)> {
        self.coeffs.iter()
    }

    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn to_json(&self) -> WeightSetJson {
        character_support(self).to_json()
    }
}

/// Kostant partition counts for every offset of height at most `depth`.
pub fn kostant_table(rs: &RootSystem, depth: u32) -> BTreeMap<Offset, i64> {
    let n = rs.rank();
    let all = offsets_up_to(n, rs.index_set(), depth);
    let mut table: BTreeMap<Offset, i64> = all.iter().map(|k| (k.clone(), 0)).collect();
    table.insert(Offset::zero(n), 1);
    for beta in rs.positive_roots() {
        // Increasing height, so `k - beta` already counts copies of `beta`.
        for k in &all {
            let prev = k.minus(beta);
            if prev.0.iter().all(|&c| c >= 0) {
                let add = table[&prev];
                *table.get_mut(k).unwrap() += add;
            }
        }
    }
    table
}

/// `ch M(lambda)` truncated at `depth`.
pub fn verma_character(rs: &RootSystem, lambda: &Weight, depth: u32) -> Result<FormalCharacter> {
    rs.check_weight(lambda)?;
    let mut ch = FormalCharacter::new(lambda.clone(), depth);
    for (k, c) in kostant_table(rs, depth) {
        ch.add(k, c);
    }
    Ok(ch)
}

/// `ch L(lambda) = sum_{w in W_{J_lambda}} (-1)^{l(w)} ch M(w . lambda)`,
/// truncated at `depth`. Refuses unless `S_lambda = W_{J_lambda}`.
pub fn wcf_character(group: &WeylGroup, lambda: &Weight, depth: u32) -> Result<FormalCharacter> {
    let rs = group.root_system();
    rs.check_weight(lambda)?;
    if !group.wcf_condition_holds(lambda)? {
        let s: Vec<String> = group.s_lambda_set(lambda)?.iter().map(ToString::to_string).collect();
        return Err(Error::WcfHypothesis(format!(
            "S_lambda = {{{}}} differs from W_{{J_lambda}} with J_lambda = {}",
            s.join(", "),
            j_lambda(lambda)
        )));
    }
    let kostant = kostant_table(rs, depth);
    let mut ch = FormalCharacter::new(lambda.clone(), depth);
    for w in group.parabolic(j_lambda(lambda))?.iter() {
        let shifted = group.dot_action(w, lambda);
        let kw = rs
            .offset_between(lambda, &shifted)?
            .ok_or_else(|| Error::Internal(format!("{w} . lambda is not below lambda")))?;
        let kw = Offset(kw);
        if kw.height() > i64::from(depth) {
            continue;
        }
        let sign = w.sign();
        for (k, c) in &kostant {
            let total = k.plus(&kw.0);
            ch.add(total, sign * c);
        }
    }
    if let Some((k, c)) = ch.terms().find(|(_, &c)| c < 0) {
        return Err(Error::Internal(format!("negative coefficient {c} at offset {:?}", k.0)));
    }
    if ch.coeff(&Offset::zero(rs.rank())) != 1 {
        return Err(Error::Internal("highest weight coefficient is not 1".into()));
    }
    Ok(ch)
}

/// Offsets with positive coefficient, carrying the coefficients as
/// multiplicities.
pub fn character_support(c: &FormalCharacter) -> TruncatedWeightSet {
    let mut s = TruncatedWeightSet::new(c.lambda.clone(), c.depth);
    for (k, &v) in &c.coeffs {
        if v > 0 {
            s.insert(k.clone(), Some(v as u64));
        }
    }
    s
}

/// `prod_{beta in Phi+} (lambda + rho, beta) / (rho, beta)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    let rho = rs.rho(rs.index_set());
    let shifted = lambda.add(&rho);
    let mut out = Rational::one();
    for beta in rs.positive_roots() {
        let b = rs.from_int_root_coords(beta);
        let den = rs.bilinear(&rho, &b)?;
        if den.is_zero() {
            return Err(Error::Internal("rho orthogonal to a positive root".into()));
        }
        out *= rs.bilinear(&shifted, &b)? / den;
    }
    Ok(out)
}

/// Character JSON: the weight-set layout with every multiplicity present.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterJson {
    #[serde(flatten)]
    pub weights: WeightSetJson,
    pub total: i64,
}

impl FormalCharacter {
    pub fn to_report(&self) -> CharacterJson {
        CharacterJson { weights: self.to_json(), total: self.total() }
    }
}
