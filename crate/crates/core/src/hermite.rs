//! Column-style (HNF-1) and row-style (HNF-2) Hermite reductions in
//! Kannan-Bachem cancellation order, extended to rectangular matrices of
//! any rank.
//!
//! HNF-1 yields a lower triangle of size `k` (the rank) with positive
//! diagonal, sitting above an arbitrary `(n - k) x k` rectangle, and null
//! columns `k..m`. Row swaps are allowed when a pivot vanishes, so for
//! rank-deficient input the result is not the unique column-style Hermite
//! form, only an equivalent triangular matrix. HNF-2 is the exact transpose
//! mirror.

use num_traits::{Signed, Zero};

use crate::bezout::OpLog;
use crate::matrix::ExactMatrix;
use crate::tracked::{Budget, Exhausted, Tracked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HermiteStyle {
    /// Column operations, lower triangular result.
    Column,
    /// Row operations, upper triangular result.
    Row,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HermiteOptions {
    /// Accumulate `left` and `right` with `left * input * right = matrix`.
    pub transforms: bool,
    pub record_ops: bool,
}

#[derive(Debug, Clone)]
pub struct HermiteResult {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub style: HermiteStyle,
    pub op_log: Option<OpLog>,
    pub left_transform: Option<ExactMatrix>,
    pub right_transform: Option<ExactMatrix>,
}

impl HermiteResult {
    /// Product of the `rank` leading diagonal entries.
    pub fn diagonal_product(&self) -> num_bigint::BigInt {
        (0..self.rank).map(|i| self.matrix.get(i, i)).product()
    }
}

/// The order in which above-diagonal entries of an `n x n` matrix are
/// cancelled: column by column, top to bottom. Positions are 0-based.
pub fn kb_cancel_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn hnf1(m: &ExactMatrix, with_transforms: bool) -> HermiteResult {
    hnf1_with(
        m,
        HermiteOptions {
            transforms: with_transforms,
            record_ops: false,
        },
    )
}

pub fn hnf2(m: &ExactMatrix, with_transforms: bool) -> HermiteResult {
    hnf2_with(
        m,
        HermiteOptions {
            transforms: with_transforms,
            record_ops: false,
        },
    )
}

pub fn hnf1_with(m: &ExactMatrix, opts: HermiteOptions) -> HermiteResult {
    run(m, opts, HermiteStyle::Column)
}

pub fn hnf2_with(m: &ExactMatrix, opts: HermiteOptions) -> HermiteResult {
    run(m, opts, HermiteStyle::Row)
}

fn run(m: &ExactMatrix, opts: HermiteOptions, style: HermiteStyle) -> HermiteResult {
    let mut t = Tracked::new(
        m.clone(),
        opts.transforms,
        opts.record_ops,
        Budget::unlimited(),
    );
    let rank = match style {
        HermiteStyle::Column => column_pass(&mut t, 0),
        HermiteStyle::Row => row_pass(&mut t, 0),
    }
    .expect("no budget");
    let parts = t.into_parts();
    HermiteResult {
        matrix: parts.matrix,
        rank,
        style,
        op_log: parts.log,
        left_transform: parts.left,
        right_transform: parts.right,
    }
}

/// HNF-1 on the trailing block `start.., start..` of the physical matrix.
///
/// Rows and columns before `start` must already be clear outside the
/// diagonal. Returns the total rank (including the `start` leading pivots).
pub(crate) fn column_pass(t: &mut Tracked, start: usize) -> Result<usize, Exhausted> {
    let (n, m) = t.dims();
    let mut c = start;
    while c < m {
        let mut disturbed = None;
        for r in start..c.min(n) {
            if t.cancel_in_row(r, r, c)? {
                // Column r changed below the pivot and the pivot shrank.
                for k in start..r {
                    t.residue_in_row(r, r, k)?;
                }
                disturbed.get_or_insert(r);
            }
        }
        // Rows below the first disturbed pivot picked up entries in the
        // columns up to their own; reduce them top down.
        if let Some(first) = disturbed {
            for r2 in first + 1..c.min(n) {
                for k in start..r2 {
                    t.residue_in_row(r2, r2, k)?;
                }
            }
        }
        if c >= n {
            // Every row already has a pivot, the column is now null.
            debug_assert!(t.m.col_is_zero(c));
            c += 1;
            continue;
        }
        if t.at(c, c).is_zero() {
            if let Some(j) = (c + 1..n).find(|&j| !t.at(j, c).is_zero()) {
                t.swap_rows(c, j)?;
            } else if let Some(j) = (c + 1..m).find(|&j| !t.m.col_is_zero(j)) {
                // Null column: bring in the next non-null one and treat it
                // from the top.
                t.swap_cols(c, j)?;
                continue;
            } else {
                break;
            }
        }
        if t.at(c, c).is_negative() {
            t.negate_col(c)?;
        }
        // Keep the leading block fully reduced: this bounds the transform
        // built so far, hence the entries of the rows below.
        for k in start..c {
            t.residue_in_row(c, c, k)?;
        }
        c += 1;
    }
    let rank = c.min(n);
    for r in start..rank {
        for k in start..r {
            t.residue_in_row(r, r, k)?;
        }
    }
    Ok(rank)
}

/// HNF-2 on the trailing block, run as HNF-1 on the transpose.
pub(crate) fn row_pass(t: &mut Tracked, start: usize) -> Result<usize, Exhausted> {
    t.transpose();
    let rank = column_pass(t, start);
    t.transpose();
    rank
}

/// Structural check of an HNF-1 output of rank `rank`.
pub fn is_column_style(m: &ExactMatrix, rank: usize) -> bool {
    let (n, cols) = m.dims();
    if rank > n.min(cols) {
        return false;
    }
    for i in 0..rank {
        let d = m.get(i, i);
        if !d.is_positive() {
            return false;
        }
        if (i + 1..cols).any(|j| !m.get(i, j).is_zero()) {
            return false;
        }
        if (0..i).any(|j| m.get(i, j).is_negative() || m.get(i, j) >= d) {
            return false;
        }
    }
    (rank..cols).all(|j| m.col_is_zero(j))
}

/// Structural check of an HNF-2 output of rank `rank`.
pub fn is_row_style(m: &ExactMatrix, rank: usize) -> bool {
    is_column_style(&m.transpose(), rank)
}
