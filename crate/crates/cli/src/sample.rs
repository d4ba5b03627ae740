//! Seeded random highest weights, spread over four strata.

use hwmod::hwmodule::antidominant;
use hwmod::rational::{frac, int};
use hwmod::{Rational, RootSystem, Weight};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stratum {
    DominantIntegral,
    Antidominant,
    SimplyRegular,
    Wall,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [Stratum::DominantIntegral, Stratum::Antidominant, Stratum::SimplyRegular, Stratum::Wall];

    pub fn name(self) -> &'static str {
        match self {
            Stratum::DominantIntegral => "dominant-integral",
            Stratum::Antidominant => "antidominant",
            Stratum::SimplyRegular => "simply-regular",
            Stratum::Wall => "wall",
        }
    }
}

/// `{-3..3} u {+-1/2, +-1/3, +-3/2}`.
pub fn coordinate_pool() -> Vec<Rational> {
    let mut v: Vec<Rational> = (-3..=3).map(int).collect();
    for (p, q) in [(1, 2), (1, 3), (3, 2)] {
        v.push(frac(p, q));
        v.push(frac(-p, q));
    }
    v
}

pub struct Sampler {
    rng: ChaCha8Rng,
    pool: Vec<Rational>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), pool: coordinate_pool() }
    }

    fn pick(&mut self, keep: impl Fn(&Rational) -> bool) -> Rational {
        let choices: Vec<&Rational> = self.pool.iter().filter(|q| keep(q)).collect();
        (*choices.choose(&mut self.rng).expect("nonempty pool")).clone()
    }

    /// One weight from the given stratum.
    pub fn weight(&mut self, rs: &RootSystem, stratum: Stratum) -> Weight {
        let n = rs.rank();
        match stratum {
            Stratum::DominantIntegral => Weight::new((0..n).map(|_| int(self.rng.gen_range(0..=3))).collect()),
            Stratum::Antidominant => {
                for _ in 0..64 {
                    let w = Weight::new((0..n).map(|_| self.pick(|q| q < &int(0))).collect());
                    if antidominant(rs, &w).unwrap_or(false) {
                        return w;
                    }
                }
                // -rho is always antidominant.
                Weight::new(vec![int(-1); n])
            }
            Stratum::SimplyRegular => {
                let mut c: Vec<Rational> = (0..n).map(|_| self.pick(|q| q != &int(0))).collect();
                // Make J_lambda nonempty half of the time.
                if self.rng.gen_bool(0.5) {
                    let i = self.rng.gen_range(0..n);
                    c[i] = int(self.rng.gen_range(1..=3));
                }
                Weight::new(c)
            }
            Stratum::Wall => {
                let mut c: Vec<Rational> = (0..n).map(|_| self.pick(|_| true)).collect();
                let i = self.rng.gen_range(0..n);
                c[i] = int(0);
                Weight::new(c)
            }
        }
    }

    /// `count` weights cycling through the strata in order.
    pub fn weights(&mut self, rs: &RootSystem, count: usize) -> Vec<(Stratum, Weight)> {
        (0..count)
            .map(|i| {
                let s = Stratum::ALL[i % Stratum::ALL.len()];
                (s, self.weight(rs, s))
            })
            .collect()
    }

    /// `count` weights from a single stratum.
    pub fn weights_in(&mut self, rs: &RootSystem, stratum: Stratum, count: usize) -> Vec<Weight> {
        (0..count).map(|_| self.weight(rs, stratum)).collect()
    }
}
