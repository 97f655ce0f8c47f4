//! The working state shared by every reduction: the matrix being reduced,
//! the optional accumulated transforms, the optional operation log and the
//! step budget.
//!
//! Row-style passes run on the transposed matrix. `transposed` records
//! that the physical matrix is the transpose of the logical one; logged
//! operations are always stored in logical orientation.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bezout::{extended_gcd_minimal, OpLog, Operation, Side};
use crate::matrix::ExactMatrix;

/// Limits on the work a reduction may perform.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of elementary row/column operations.
    pub max_ops: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Budget {
            max_ops: None,
            max_time: None,
        }
    }

    pub const fn ops(n: u64) -> Self {
        Budget {
            max_ops: Some(n),
            max_time: None,
        }
    }

    pub const fn time(d: Duration) -> Self {
        Budget {
            max_ops: None,
            max_time: Some(d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

#[derive(Debug)]
pub(crate) struct Meter {
    pub ops: u64,
    max_ops: Option<u64>,
    deadline: Option<Instant>,
    pub started: Instant,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        let started = Instant::now();
        Meter {
            ops: 0,
            max_ops: budget.max_ops,
            deadline: budget.max_time.map(|d| started + d),
            started,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), Exhausted> {
        self.ops += 1;
        if self.max_ops.is_some_and(|max| self.ops > max) {
            return Err(Exhausted);
        }
        // Late in a blow-up a single operation can take seconds, so the clock
        // is read every time.
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Exhausted);
        }
        Ok(())
    }
}

pub(crate) type Step = Result<(), Exhausted>;

#[derive(Debug)]
pub(crate) struct Tracked {
    pub m: ExactMatrix,
    left: Option<ExactMatrix>,
    right: Option<ExactMatrix>,
    log: Option<OpLog>,
    transposed: bool,
    /// Rows at or past `live_rows` and columns at or past `live_cols` of
    /// `m` are zero.
    live_rows: usize,
    live_cols: usize,
    pub meter: Meter,
}

/// The zero-line bound on the side `op` acts on, after `op`. A line past
/// the bound can only become nonzero by mixing with a line inside it.
fn grown_extent(op: &Operation, extent: usize) -> usize {
    match *op {
        Operation::Combine { i, j, .. } | Operation::Swap { i, j, .. }
            if i < extent || j < extent =>
        {
            extent.max(i + 1).max(j + 1)
        }
        Operation::Shear { i, j, .. } if i < extent => extent.max(j + 1),
        _ => extent,
    }
}

pub(crate) struct Parts {
    pub matrix: ExactMatrix,
    pub left: Option<ExactMatrix>,
    pub right: Option<ExactMatrix>,
    pub log: Option<OpLog>,
}

impl Tracked {
    pub fn new(m: ExactMatrix, transforms: bool, log: bool, budget: Budget) -> Self {
        let (n, k) = m.dims();
        let (live_rows, live_cols) = (m.row_extent(), m.col_extent());
        Tracked {
            left: transforms.then(|| ExactMatrix::identity(n)),
            right: transforms.then(|| ExactMatrix::identity(k)),
            m,
            log: log.then(OpLog::new),
            transposed: false,
            live_rows,
            live_cols,
            meter: Meter::new(budget),
        }
    }

    /// Takes the matrix out of `m` (leaving it empty) with no transforms.
    pub fn borrow(m: &mut ExactMatrix, log: bool) -> Self {
        Self::new(std::mem::take(m), false, log, Budget::unlimited())
    }

    pub fn dims(&self) -> (usize, usize) {
        self.m.dims()
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        self.m.get(i, j)
    }

    /// Swaps the physical orientation.
    pub fn transpose(&mut self) {
        self.m.transpose_in_place();
        let left = self.left.take();
        let right = self.right.take();
        self.left = right.map(|mut r| {
            r.transpose_in_place();
            r
        });
        self.right = left.map(|mut l| {
            l.transpose_in_place();
            l
        });
        self.transposed = !self.transposed;
        self.tighten();
    }

    /// Recomputes the zero-line bounds, which operations only ever widen.
    /// Worth calling between passes.
    pub fn tighten(&mut self) {
        self.live_rows = self.m.row_extent();
        self.live_cols = self.m.col_extent();
    }

    pub fn into_parts(mut self) -> Parts {
        if self.transposed {
            self.transpose();
        }
        Parts {
            matrix: self.m,
            left: self.left,
            right: self.right,
            log: self.log,
        }
    }

    fn run(&mut self, op: Operation) -> Step {
        self.meter.tick()?;
        match op.side() {
            Side::Right => {
                op.apply_within(&mut self.m, self.live_rows);
                self.live_cols = grown_extent(&op, self.live_cols);
                if let Some(u) = &mut self.right {
                    op.apply(u);
                }
            }
            Side::Left => {
                op.apply_within(&mut self.m, self.live_cols);
                self.live_rows = grown_extent(&op, self.live_rows);
                if let Some(v) = &mut self.left {
                    op.apply(v);
                }
            }
        }
        if let Some(log) = &mut self.log {
            log.push(if self.transposed { op.mirrored() } else { op });
        }
        Ok(())
    }

    pub fn combine_cols(&mut self, i: usize, j: usize, coeffs: [BigInt; 4]) -> Step {
        self.run(Operation::Combine {
            side: Side::Right,
            i,
            j,
            coeffs: Box::new(coeffs),
        })
    }

    pub fn combine_rows(&mut self, i: usize, j: usize, coeffs: [BigInt; 4]) -> Step {
        self.run(Operation::Combine {
            side: Side::Left,
            i,
            j,
            coeffs: Box::new(coeffs),
        })
    }

    /// `col_j <- col_j - alpha col_i`
    pub fn shear_cols(&mut self, i: usize, j: usize, alpha: BigInt) -> Step {
        if alpha.is_zero() {
            return Ok(());
        }
        self.run(Operation::Shear {
            side: Side::Right,
            i,
            j,
            alpha,
        })
    }

    /// `row_j <- row_j - alpha row_i`
    pub fn shear_rows(&mut self, i: usize, j: usize, alpha: BigInt) -> Step {
        if alpha.is_zero() {
            return Ok(());
        }
        self.run(Operation::Shear {
            side: Side::Left,
            i,
            j,
            alpha,
        })
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) -> Step {
        self.run(Operation::Swap {
            side: Side::Left,
            i,
            j,
        })
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) -> Step {
        self.run(Operation::Swap {
            side: Side::Right,
            i,
            j,
        })
    }

    pub fn negate_col(&mut self, j: usize) -> Step {
        self.run(Operation::Negate {
            side: Side::Right,
            i: j,
        })
    }

    /// Clears `(row, j)` against the positive pivot `(row, i)` with a column
    /// operation. Returns whether the pivot changed.
    pub fn cancel_in_row(&mut self, row: usize, i: usize, j: usize) -> Result<bool, Exhausted> {
        let a = self.at(row, i);
        let b = self.at(row, j);
        if b.is_zero() {
            return Ok(false);
        }
        debug_assert!(a > &BigInt::zero());
        // Reduce b modulo the pivot first so the Bezout coefficients stay
        // below the pivot.
        let alpha = b.div_floor(a);
        self.shear_cols(i, j, alpha)?;
        let (a, b) = (self.at(row, i), self.at(row, j));
        if b.is_zero() {
            return Ok(false);
        }
        let t = extended_gcd_minimal(a, b).expect("pivot is nonzero");
        debug_assert!(t.a.is_multiple_of(&t.r) && t.b.is_multiple_of(&t.r));
        self.combine_cols(i, j, t.coefficients())?;
        debug_assert!(self.at(row, j).is_zero());
        Ok(true)
    }

    /// Clears `(j, col)` against the positive pivot `(i, col)` with a row
    /// operation. Returns whether the pivot changed.
    pub fn cancel_in_col(&mut self, col: usize, i: usize, j: usize) -> Result<bool, Exhausted> {
        let a = self.at(i, col);
        let b = self.at(j, col);
        if b.is_zero() {
            return Ok(false);
        }
        debug_assert!(a > &BigInt::zero());
        let alpha = b.div_floor(a);
        self.shear_rows(i, j, alpha)?;
        let (a, b) = (self.at(i, col), self.at(j, col));
        if b.is_zero() {
            return Ok(false);
        }
        let t = extended_gcd_minimal(a, b).expect("pivot is nonzero");
        self.combine_rows(i, j, t.coefficients())?;
        debug_assert!(self.at(j, col).is_zero());
        Ok(true)
    }

    /// Reduces `(row, k)` into `[0, pivot)` with the column of the pivot
    /// `(row, pivot_col)`.
    pub fn residue_in_row(&mut self, row: usize, pivot_col: usize, k: usize) -> Step {
        let (v, p) = (self.at(row, k), self.at(row, pivot_col));
        if !v.is_negative() && v < p {
            return Ok(());
        }
        let q = v.div_floor(p);
        self.shear_cols(pivot_col, k, q)
    }

    /// Reduces `(r, col)` into `[0, pivot)` with the row of the pivot
    /// `(pivot_row, col)`.
    pub fn residue_in_col(&mut self, col: usize, pivot_row: usize, r: usize) -> Step {
        let (v, p) = (self.at(r, col), self.at(pivot_row, col));
        if !v.is_negative() && v < p {
            return Ok(());
        }
        let q = v.div_floor(p);
        self.shear_rows(pivot_row, r, q)
    }

    /// Replaces the isolated positive diagonal pair at `i`, `j` by
    /// `(gcd, lcm)` with a row shear, a column Bezout operation and a
    /// second row shear.
    pub fn normalize_pair(&mut self, i: usize, j: usize) -> Result<bool, Exhausted> {
        let a = self.at(i, i).clone();
        let b = self.at(j, j).clone();
        if b.is_multiple_of(&a) {
            return Ok(false);
        }
        // row_i += row_j puts b at (i, j).
        self.shear_rows(j, i, -BigInt::one())?;
        let t = extended_gcd_minimal(&a, &b).expect("a > 0");
        self.combine_cols(i, j, t.coefficients())?;
        // (j, i) now holds b q, a multiple of r = (i, i).
        let alpha = self.at(j, i) / self.at(i, i);
        self.shear_rows(i, j, alpha)?;
        debug_assert!(self.at(j, i).is_zero() && self.at(i, j).is_zero());
        Ok(true)
    }
}
