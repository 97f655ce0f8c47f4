//! Constructive homology of `Z^p --d--> Z^n --d'--> Z^m` with `d' d = 0`.
//!
//! With `s' = v' d' u'` in Smith form of rank `r'`, the kernel of `d'` is
//! `u'` applied to the last `k = n - r'` coordinates. Since
//! `s' u'^{-1} d = v' d' d = 0`, the image of `u'^{-1} d` lies in those
//! coordinates; calling `y` its restriction to them, the homology is
//! `Z^k / im y`. A Smith reduction `s = v y u` then exhibits the cyclic
//! factors, and `u' v^{-1} e_i` is a cycle generating the `i`-th one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::smith::{smith, SmithOptions, Variant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub free_rank: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<BigInt>,
    /// Cycles in `Z^n`: torsion generators first, then free ones.
    pub generators: Vec<Vec<BigInt>>,
    /// Order of each generator, 0 for a free one.
    pub orders: Vec<BigInt>,
}

impl HomologyResult {
    /// Checks every generator against the complex: `d' g = 0`, and for a
    /// torsion generator of order `t`, `t g` lies in the column span of `d`.
    pub fn verify(&self, dprime: &ExactMatrix, d: &ExactMatrix) -> Result<bool> {
        for (g, t) in self.generators.iter().zip(&self.orders) {
            if dprime.mul_vec(g)?.iter().any(|v| !v.is_zero()) {
                return Ok(false);
            }
            if !t.is_zero() {
                let tg: Vec<BigInt> = g.iter().map(|x| x * t).collect();
                if !in_column_span(d, &tg)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The group as `(Z/2)^3 + Z/4 + Z^2`, or `0` when trivial.
    pub fn group_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        let mut idx = 0;
        while idx < self.torsion.len() {
            let t = &self.torsion[idx];
            let n = self.torsion[idx..].iter().take_while(|x| *x == t).count();
            terms.push(if n == 1 {
                format!("Z/{t}")
            } else {
                format!("(Z/{t})^{n}")
            });
            idx += n;
        }
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".into()),
            r => terms.push(format!("Z^{r}")),
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Homology at the middle of `Z^p --d--> Z^n --d'--> Z^m`. `dprime` is
/// `m x n` and `d` is `n x p`.
pub fn homology_group(
    dprime: &ExactMatrix,
    d: &ExactMatrix,
    variant: Variant,
) -> Result<HomologyResult> {
    let n = dprime.cols();
    if d.rows() != n {
        return Err(Error::Dimension(format!(
            "d' is {}x{} but d is {}x{}: d' needs as many columns as d has rows",
            dprime.rows(),
            n,
            d.rows(),
            d.cols()
        )));
    }
    if !dprime.mul(d)?.is_zero() {
        return Err(Error::InvalidInput("d' d is not zero".into()));
    }

    let outer = smith(
        dprime,
        variant,
        SmithOptions {
            transforms: true,
            record_ops: true,
            ..Default::default()
        },
    )?;
    let r_outer = outer.rank;
    let k = n - r_outer;
    let u_outer = outer.u.expect("transforms requested");
    let solved = outer.op_log.expect("ops recorded").solve_right_factor(d);
    for i in 0..r_outer {
        if solved.row(i).any(|v| !v.is_zero()) {
            return Err(Error::InvalidInput(
                "image of d is not inside the kernel of d'".into(),
            ));
        }
    }
    let mut y = ExactMatrix::zeros(k, d.cols());
    for i in 0..k {
        for j in 0..d.cols() {
            y.set(i, j, solved.get(r_outer + i, j).clone());
        }
    }

    let inner = smith(
        &y,
        variant,
        SmithOptions {
            record_ops: true,
            ..Default::default()
        },
    )?;
    let v_inv = inner.op_log.expect("ops recorded").left_factor_inverse(k);
    let invariants = inner.s.diagonal();

    let mut torsion = Vec::new();
    let mut orders = Vec::new();
    let mut selected = Vec::new();
    for i in 0..k {
        let inv = invariants.get(i).cloned().unwrap_or_else(BigInt::zero);
        if inv.is_one() {
            continue;
        }
        if !inv.is_zero() {
            torsion.push(inv.clone());
        }
        orders.push(inv);
        selected.push(i);
    }

    let generators: Vec<Vec<BigInt>> = selected
        .iter()
        .map(|&i| {
            let mut embedded = vec![BigInt::zero(); n];
            for (row, x) in embedded[r_outer..].iter_mut().enumerate() {
                *x = v_inv.get(row, i).clone();
            }
            u_outer.mul_vec(&embedded).expect("dimensions agree")
        })
        .collect();

    for g in &generators {
        assert!(
            dprime.mul_vec(g)?.iter().all(Zero::is_zero),
            "homology generator is not a cycle"
        );
    }

    Ok(HomologyResult {
        free_rank: k - inner.rank,
        torsion,
        generators,
        orders,
    })
}

/// Whether `y` is an integer combination of the columns of `m`.
pub fn in_column_span(m: &ExactMatrix, y: &[BigInt]) -> Result<bool> {
    if y.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "vector of length {} against a matrix with {} rows",
            y.len(),
            m.rows()
        )));
    }
    // m x = y  <=>  s (u^{-1} x) = v y
    let dec = smith(m, Variant::Kb3, SmithOptions::with_transforms())?;
    let vy = dec.v.expect("transforms requested").mul_vec(y)?;
    Ok(vy.iter().enumerate().all(|(i, c)| {
        if i < dec.rank {
            c.is_multiple_of(dec.s.get(i, i))
        } else {
            c.is_zero()
        }
    }))
}

/// Writes a vector as space-separated 1-based `index:value` pairs of its
/// nonzero entries.
pub fn sparse_vector_string(v: &[BigInt]) -> String {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| format!("{}:{}", i + 1, x))
        .collect::<Vec<_>>()
        .join(" ")
}
