//! Exact linear feasibility by the two-phase simplex method (phase one only),
//! with Bland's rule so it cannot cycle.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// A system of linear equalities and `<=` inequalities over `n` variables,
/// each variable either free or constrained to be nonnegative.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    n: usize,
    free: Vec<bool>,
    eq: Vec<(Vec<Rational>, Rational)>,
    le: Vec<(Vec<Rational>, Rational)>,
}

impl LinearSystem {
    /// `n` nonnegative variables.
    pub fn nonnegative(n: usize) -> Self {
        Self { n, free: vec![false; n], eq: Vec::new(), le: Vec::new() }
    }

    /// `n` free variables.
    pub fn free(n: usize) -> Self {
        Self { n, free: vec![true; n], eq: Vec::new(), le: Vec::new() }
    }

    pub fn equal(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.n);
        self.eq.push((coeffs, rhs));
        self
    }

    pub fn at_most(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.n);
        self.le.push((coeffs, rhs));
        self
    }

    /// Returns a feasible point, or `None` if the system is infeasible.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        // Column layout: structural columns (free variables split in two),
        // then one slack per inequality, then artificials as needed.
        let mut col_of = Vec::with_capacity(self.n);
        let mut ncols = 0;
        for &f in &self.free {
            col_of.push(ncols);
            ncols += if f { 2 } else { 1 };
        }
        let n_struct = ncols;
        let n_slack = self.le.len();
        let m = self.eq.len() + self.le.len();

        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut rhs: Vec<Rational> = Vec::with_capacity(m);
        let mut basis: Vec<Option<usize>> = Vec::with_capacity(m);
        let all = self
            .eq
            .iter()
            .map(|r| (r, None))
            .chain(self.le.iter().enumerate().map(|(k, r)| (r, Some(k))));
        for ((coeffs, b), slack) in all {
            let mut row = vec![Rational::zero(); n_struct + n_slack];
            for (j, a) in coeffs.iter().enumerate() {
                row[col_of[j]] = a.clone();
                if self.free[j] {
                    row[col_of[j] + 1] = -a;
                }
            }
            if let Some(k) = slack {
                row[n_struct + k] = Rational::from_integer(1.into());
            }
            let mut b = b.clone();
            let mut basic = slack.map(|k| n_struct + k);
            if b.is_negative() {
                row.iter_mut().for_each(|x| *x = -x.clone());
                b = -b;
                basic = None;
            }
            rows.push(row);
            rhs.push(b);
            basis.push(basic);
        }

        // Artificials.
        let base_cols = n_struct + n_slack;
        let n_art = basis.iter().filter(|b| b.is_none()).count();
        let total = base_cols + n_art;
        let mut next_art = base_cols;
        let mut basis: Vec<usize> = basis
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                rows[i].resize(total, Rational::zero());
                b.unwrap_or_else(|| {
                    rows[i][next_art] = Rational::from_integer(1.into());
                    next_art += 1;
                    next_art - 1
                })
            })
            .collect();

        // Phase-one reduced costs: minimize the sum of artificials.
        let is_art = |j: usize| j >= base_cols;
        let mut cost = vec![Rational::zero(); total];
        let mut obj = Rational::zero();
        for i in 0..m {
            if is_art(basis[i]) {
                for j in 0..total {
                    if !is_art(j) {
                        cost[j] -= &rows[i][j];
                    }
                }
                obj -= &rhs[i];
            }
        }

        // Bland: smallest entering index with negative reduced cost.
        while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for i in 0..m {
                if rows[i][enter].is_positive() {
                    let ratio = &rhs[i] / &rows[i][enter];
                    let better = match &best {
                        None => true,
                        Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            // Phase one is bounded below by zero.
            let r = leave.expect("phase one cannot be unbounded");
            pivot(&mut rows, &mut rhs, &mut cost, &mut obj, r, enter);
            basis[r] = enter;
        }

        if !obj.is_zero() {
            return None;
        }
        let mut x_cols = vec![Rational::zero(); total];
        for (i, &b) in basis.iter().enumerate() {
            x_cols[b] = rhs[i].clone();
        }
        Some(
            (0..self.n)
                .map(|j| {
                    let c = col_of[j];
                    if self.free[j] {
                        &x_cols[c] - &x_cols[c + 1]
                    } else {
                        x_cols[c].clone()
                    }
                })
                .collect(),
        )
    }

    pub fn is_feasible(&self) -> bool {
        self.solve().is_some()
    }
}

fn pivot(
    rows: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    obj: &mut Rational,
    r: usize,
    c: usize,
) {
    let inv = rows[r][c].recip();
    for x in rows[r].iter_mut() {
        *x *= &inv;
    }
    rhs[r] *= &inv;
    let prow = rows[r].clone();
    let prhs = rhs[r].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        rhs[i] -= &f * &prhs;
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        *obj -= &f * &prhs;
    }
}
