//! Exact dense linear algebra: fraction-free rank, rational inversion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{clear_denominators, Rational};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are
/// exact and the entries stay polynomially bounded.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = (&row[j] * &pivot - &factor * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix (rows scaled to integers, then Bareiss).
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    bareiss_rank(rows.iter().map(|r| clear_denominators(r)).collect())
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| crate::rational::dot(row, v)).collect()
}

/// Matrix-vector product for a small integer matrix acting on rationals.
pub fn int_mat_vec(m: &[Vec<i64>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, _)| **a != 0)
                .fold(Rational::zero(), |acc, (a, x)| acc + x * Rational::from_integer(BigInt::from(*a)))
        })
        .collect()
}

pub fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(bareiss_rank(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(big(&[&[0, 1, 2], &[0, 2, 5], &[0, 3, 7]])), 2);
        assert_eq!(bareiss_rank(big(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])), 3);
        assert_eq!(bareiss_rank(Vec::new()), 0);
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let a = vec![vec![int(2), int(-1)], vec![int(-1), int(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]);
        assert!(inverse(&[vec![int(1), int(2)], vec![int(2), int(4)]]).is_none());
    }

    proptest::proptest! {
        // Bareiss agrees with plain rational elimination.
        #[test]
        fn bareiss_matches_rational_rank(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let m: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let r1 = bareiss_rank(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
            // transpose has the same rank
            let t: Vec<Vec<BigInt>> = (0..4).map(|j| m.iter().map(|r| BigInt::from(r[j])).collect()).collect();
            proptest::prop_assert_eq!(r1, bareiss_rank(t));
        }
    }
}
