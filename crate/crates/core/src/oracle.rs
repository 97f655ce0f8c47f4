//! Brute-force reference computations for small matrices: exact
//! determinant, rank and the GCD of all `k x k` minors. They share no code
//! with the reductions and are used to check them.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Fraction-free (Bareiss) elimination of `rows`, in place. Returns the
/// rank and, for a square input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut rank = 0usize;
    for c in 0..m {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..n {
            for k in c + 1..m {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let det = if n == m && rank == n {
        if n == 0 {
            BigInt::one()
        } else if sign < 0 {
            -a[n - 1][n - 1].clone()
        } else {
            a[n - 1][n - 1].clone()
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &ExactMatrix) -> Result<BigInt> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(bareiss(m.to_rows()).1)
}

/// Rank over the rationals.
pub fn rank_oracle(m: &ExactMatrix) -> usize {
    bareiss(m.to_rows()).0
}

/// GCD of the determinants of all `k x k` submatrices (0 when they all
/// vanish, 1 for `k = 0`). Combinatorial cost: desk-scale input only.
pub fn minor_gcd_oracle(m: &ExactMatrix, k: usize) -> Result<BigInt> {
    if k > m.rows().min(m.cols()) {
        return Err(Error::InvalidInput(format!(
            "minor size {k} exceeds {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let rows = m.to_rows();
    let mut g = BigInt::zero();
    for rs in (0..m.rows()).combinations(k) {
        for cs in (0..m.cols()).combinations(k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                .collect();
            let (_, det) = bareiss(sub);
            g = g.gcd(&det);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// Number of `k x k` minors of an `n x m` matrix, saturating.
pub fn minor_count(n: usize, m: usize, k: usize) -> u128 {
    binomial(n, k).saturating_mul(binomial(m, k))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
