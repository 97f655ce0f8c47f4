//! Dense matrices of arbitrary-precision integers.
//!
//! Entries are stored column by column: the Hermite kernels spend almost all
//! of their time combining pairs of columns, and every row-style pass is run
//! on the transposed matrix.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    /// Builds a matrix from its entries listed row by row.
    pub fn new<I, T>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut m = Self::zeros(rows, cols);
        for (idx, v) in entries.into_iter().enumerate() {
            let (i, j) = (idx / cols, idx % cols);
            m.data[j * rows + i] = v;
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// A `rows x cols` matrix carrying `diag` on its main diagonal.
    pub fn from_diagonal<T: Clone + Into<BigInt>>(rows: usize, cols: usize, diag: &[T]) -> Self {
        assert!(
            diag.len() <= rows.min(cols),
            "diagonal longer than the matrix"
        );
        let mut m = Self::zeros(rows, cols);
        for (i, v) in diag.iter().enumerate() {
            m.set(i, i, v.clone().into());
        }
        m
    }

    /// Convenience constructor from nested rows of machine integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.as_ref().len());
        let mut out = Self::zeros(n, m);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), m, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                out.set(i, j, BigInt::from(*v));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[j * self.rows + i]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[j * self.rows + i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        *self.get_mut(i, j) = v;
    }

    pub fn col(&self, j: usize) -> &[BigInt] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = &BigInt> + '_ {
        (0..self.cols).map(move |j| self.get(i, j))
    }

    /// Entries in row-major order, with their 0-based positions.
    pub fn iter_row_major(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).cloned().collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        self.col(j).iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.iter_row_major().all(|(i, j, v)| i == j || v.is_zero())
    }

    /// No nonzero entry strictly above the diagonal.
    pub fn is_lower_triangular(&self) -> bool {
        self.iter_row_major().all(|(i, j, v)| j <= i || v.is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.iter_row_major().all(|(i, j, v)| i <= j || v.is_zero())
    }

    /// The `min(rows, cols)` main-diagonal entries.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.iter_row_major() {
            out.set(j, i, v.clone());
        }
        out
    }

    /// Transposes in place, moving entries instead of cloning them.
    pub fn transpose_in_place(&mut self) {
        let (n, m) = (self.rows, self.cols);
        let mut old = std::mem::take(&mut self.data);
        let mut data = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                data.push(std::mem::take(&mut old[j * n + i]));
            }
        }
        self.rows = m;
        self.cols = n;
        self.data = data;
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i < self.rows {
            Ok(())
        } else {
            Err(Error::Index {
                axis: "row",
                index: i,
                bound: self.rows,
            })
        }
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j < self.cols {
            Ok(())
        } else {
            Err(Error::Index {
                axis: "column",
                index: j,
                bound: self.cols,
            })
        }
    }

    pub(crate) fn check_row_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_row(i)?;
        self.check_row(j)?;
        if i == j {
            return Err(Error::InvalidInput(format!(
                "row indices must differ (both {i})"
            )));
        }
        Ok(())
    }

    pub(crate) fn check_col_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_col(i)?;
        self.check_col(j)?;
        if i == j {
            return Err(Error::InvalidInput(format!(
                "column indices must differ (both {i})"
            )));
        }
        Ok(())
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_row_pair(i, j)?;
        self.swap_rows_unchecked(i, j);
        Ok(())
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_col_pair(i, j)?;
        self.swap_cols_unchecked(i, j);
        Ok(())
    }

    pub fn negate_row(&mut self, i: usize) -> Result<()> {
        self.check_row(i)?;
        self.negate_row_unchecked(i);
        Ok(())
    }

    pub fn negate_col(&mut self, j: usize) -> Result<()> {
        self.check_col(j)?;
        self.negate_col_unchecked(j);
        Ok(())
    }

    /// Exact product `self * rhs`.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            for (k, b) in rhs.col(j).iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let a_col = self.col(k);
                let out_col = &mut out.data[j * self.rows..(j + 1) * self.rows];
                for (o, a) in out_col.iter_mut().zip(a_col) {
                    if !a.is_zero() {
                        *o += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![BigInt::zero(); self.rows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.col(j)) {
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        Ok(out)
    }

    /// Null fraction and mean absolute value of the nonzero entries.
    pub fn density_stats(&self) -> DensityStats {
        let total = self.data.len();
        let mut nonzero = 0usize;
        let mut sum = BigInt::zero();
        for v in self.data.iter().filter(|v| !v.is_zero()) {
            nonzero += 1;
            sum += v.abs();
        }
        let null_fraction = if total == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(total - nonzero), BigInt::from(total))
        };
        let mean_abs_nonzero = if nonzero == 0 {
            BigRational::zero()
        } else {
            BigRational::new(sum, BigInt::from(nonzero))
        };
        DensityStats {
            null_fraction,
            mean_abs_nonzero,
        }
    }

    /// Mean decimal digit count of the nonzero entries strictly below the
    /// diagonal, in the first `width` columns.
    pub fn mean_digits_below_diagonal(&self, width: usize) -> f64 {
        let mut count = 0usize;
        let mut digits = 0f64;
        for j in 0..width.min(self.cols) {
            for v in &self.col(j)[(j + 1).min(self.rows)..] {
                if !v.is_zero() {
                    count += 1;
                    digits += decimal_digits(v);
                }
            }
        }
        if count == 0 {
            0.0
        } else {
            digits / count as f64
        }
    }

    // Kernels. Indices are trusted; callers validate.

    pub(crate) fn swap_rows_unchecked(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(c * self.rows + i, c * self.rows + j);
        }
    }

    pub(crate) fn swap_cols_unchecked(&mut self, i: usize, j: usize) {
        let (a, b) = self.two_cols_mut(i, j);
        a.swap_with_slice(b);
    }

    pub(crate) fn negate_row_unchecked(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = &mut self.data[c * self.rows + i];
            *v = -std::mem::take(v);
        }
    }

    pub(crate) fn negate_col_unchecked(&mut self, j: usize) {
        let rows = self.rows;
        for v in &mut self.data[j * rows..(j + 1) * rows] {
            *v = -std::mem::take(v);
        }
    }

    fn two_cols_mut(&mut self, i: usize, j: usize) -> (&mut [BigInt], &mut [BigInt]) {
        debug_assert_ne!(i, j);
        let rows = self.rows;
        if i < j {
            let (lo, hi) = self.data.split_at_mut(j * rows);
            (&mut lo[i * rows..(i + 1) * rows], &mut hi[..rows])
        } else {
            let (lo, hi) = self.data.split_at_mut(i * rows);
            (&mut hi[..rows], &mut lo[j * rows..(j + 1) * rows])
        }
    }

    /// `col_i <- c[0] col_i + c[1] col_j`, `col_j <- c[2] col_i + c[3] col_j`.
    pub(crate) fn combine_cols_unchecked(&mut self, i: usize, j: usize, c: &[BigInt; 4]) {
        self.combine_cols_within(i, j, c, self.rows);
    }

    /// Row version of [`Self::combine_cols_unchecked`].
    pub(crate) fn combine_rows_unchecked(&mut self, i: usize, j: usize, c: &[BigInt; 4]) {
        self.combine_rows_within(i, j, c, self.cols);
    }

    /// `col_j <- col_j - alpha col_i`.
    pub(crate) fn shear_cols_unchecked(&mut self, i: usize, j: usize, alpha: &BigInt) {
        self.shear_cols_within(i, j, alpha, self.rows);
    }

    /// `row_j <- row_j - alpha row_i`.
    pub(crate) fn shear_rows_unchecked(&mut self, i: usize, j: usize, alpha: &BigInt) {
        self.shear_rows_within(i, j, alpha, self.cols);
    }

    // The `_within` kernels only touch the first `len` entries of each line;
    // callers guarantee the rest are zero in both lines.

    pub(crate) fn combine_cols_within(&mut self, i: usize, j: usize, c: &[BigInt; 4], len: usize) {
        let small = small_coefficients(c);
        let (ci, cj) = self.two_cols_mut(i, j);
        for (x, y) in ci[..len].iter_mut().zip(cj[..len].iter_mut()) {
            combine_pair(x, y, c, small);
        }
    }

    pub(crate) fn combine_rows_within(&mut self, i: usize, j: usize, c: &[BigInt; 4], len: usize) {
        debug_assert_ne!(i, j);
        let small = small_coefficients(c);
        let rows = self.rows;
        for col in self.data.chunks_exact_mut(rows).take(len) {
            let (x, y) = pair_mut(col, i, j);
            combine_pair(x, y, c, small);
        }
    }

    pub(crate) fn shear_cols_within(&mut self, i: usize, j: usize, alpha: &BigInt, len: usize) {
        if alpha.is_zero() {
            return;
        }
        let kind = unit_kind(alpha);
        let mut scratch = BigInt::zero();
        let (ci, cj) = self.two_cols_mut(i, j);
        for (x, y) in ci[..len].iter().zip(cj[..len].iter_mut()) {
            shear_one(x, y, alpha, kind, &mut scratch);
        }
    }

    pub(crate) fn shear_rows_within(&mut self, i: usize, j: usize, alpha: &BigInt, len: usize) {
        if alpha.is_zero() {
            return;
        }
        let kind = unit_kind(alpha);
        let mut scratch = BigInt::zero();
        let rows = self.rows;
        for col in self.data.chunks_exact_mut(rows).take(len) {
            let (x, y) = pair_mut(col, i, j);
            shear_one(x, y, alpha, kind, &mut scratch);
        }
    }

    /// One past the last nonzero row.
    pub(crate) fn row_extent(&self) -> usize {
        (0..self.rows)
            .rev()
            .find(|&i| self.row(i).any(|v| !v.is_zero()))
            .map_or(0, |i| i + 1)
    }

    /// One past the last nonzero column.
    pub(crate) fn col_extent(&self) -> usize {
        (0..self.cols)
            .rev()
            .find(|&j| !self.col_is_zero(j))
            .map_or(0, |j| j + 1)
    }
}

#[inline]
fn pair_mut(s: &mut [BigInt], i: usize, j: usize) -> (&mut BigInt, &mut BigInt) {
    if i < j {
        let (lo, hi) = s.split_at_mut(j);
        (&mut lo[i], &mut hi[0])
    } else {
        let (lo, hi) = s.split_at_mut(i);
        (&mut hi[0], &mut lo[j])
    }
}

fn small_coefficients(c: &[BigInt; 4]) -> Option<[i64; 4]> {
    Some([
        c[0].to_i64()?,
        c[1].to_i64()?,
        c[2].to_i64()?,
        c[3].to_i64()?,
    ])
}

/// Overwrites `v` with `r`, reusing its digit buffer.
#[inline]
fn set_small(v: &mut BigInt, r: i128) {
    let sign = match r.signum() {
        0 => Sign::NoSign,
        1 => Sign::Plus,
        _ => Sign::Minus,
    };
    let mag = r.unsigned_abs();
    let digits = [
        mag as u32,
        (mag >> 32) as u32,
        (mag >> 64) as u32,
        (mag >> 96) as u32,
    ];
    v.assign_from_slice(sign, &digits);
}

#[inline]
fn combine_pair(x: &mut BigInt, y: &mut BigInt, c: &[BigInt; 4], small: Option<[i64; 4]>) {
    if let (Some(k), Some(a), Some(b)) = (small, x.to_i64(), y.to_i64()) {
        let (a, b) = (a as i128, b as i128);
        let nx = (k[0] as i128 * a).checked_add(k[1] as i128 * b);
        let ny = (k[2] as i128 * a).checked_add(k[3] as i128 * b);
        if let (Some(nx), Some(ny)) = (nx, ny) {
            set_small(x, nx);
            set_small(y, ny);
            return;
        }
    }
    match (x.is_zero(), y.is_zero()) {
        (true, true) => {}
        (false, true) => {
            *y = &c[2] * &*x;
            *x *= &c[0];
        }
        (true, false) => {
            *x = &c[1] * &*y;
            *y *= &c[3];
        }
        (false, false) => {
            let nx = &c[0] * &*x + &c[1] * &*y;
            let ny = &c[2] * &*x + &c[3] * &*y;
            *x = nx;
            *y = ny;
        }
    }
}

#[derive(Clone, Copy)]
enum Unit {
    One,
    MinusOne,
    /// A coefficient that fits a machine word.
    Small(i64),
    Other,
}

fn unit_kind(alpha: &BigInt) -> Unit {
    if alpha.is_one() {
        Unit::One
    } else if alpha.magnitude().is_one() {
        Unit::MinusOne
    } else if let Some(a) = alpha.to_i64() {
        Unit::Small(a)
    } else {
        Unit::Other
    }
}

/// `y -= alpha x`. `scratch` is reused across calls to avoid a temporary
/// per entry.
#[inline]
fn shear_one(x: &BigInt, y: &mut BigInt, alpha: &BigInt, kind: Unit, scratch: &mut BigInt) {
    if x.is_zero() {
        return;
    }
    if let (Some(a), Some(b)) = (x.to_i128(), y.to_i128()) {
        let r = match kind {
            Unit::One => b.checked_sub(a),
            Unit::MinusOne => b.checked_add(a),
            Unit::Small(k) => (k as i128).checked_mul(a).and_then(|p| b.checked_sub(p)),
            Unit::Other => None,
        };
        if let Some(r) = r {
            set_small(y, r);
            return;
        }
    }
    match kind {
        Unit::One => *y -= x,
        Unit::MinusOne => *y += x,
        Unit::Small(k) => {
            scratch.clone_from(x);
            *scratch *= k;
            *y -= &*scratch;
        }
        Unit::Other => {
            scratch.clone_from(x);
            *scratch *= alpha;
            *y -= &*scratch;
        }
    }
}

/// Decimal digit count estimated from the bit length (exact up to one digit).
pub(crate) fn decimal_digits(v: &BigInt) -> f64 {
    (v.bits() as f64 * std::f64::consts::LOG10_2)
        .ceil()
        .max(1.0)
}

/// Sparsity figures for a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityStats {
    pub null_fraction: BigRational,
    pub mean_abs_nonzero: BigRational,
}

impl DensityStats {
    pub fn null_percent(&self) -> f64 {
        ratio_to_f64(&self.null_fraction) * 100.0
    }

    pub fn mean_abs_f64(&self) -> f64 {
        ratio_to_f64(&self.mean_abs_nonzero)
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{} {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn row_major_layout() {
        let m = ExactMatrix::new(2, 3, [1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(m.get(1, 2), &big(6));
        assert_eq!(m.get(0, 1), &big(2));
        assert_eq!(m.col(1), &[big(2), big(5)]);
    }

    #[test]
    fn zero_one_by_one() {
        let m = ExactMatrix::new(1, 1, [0]).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn entry_count_mismatch() {
        assert!(matches!(
            ExactMatrix::new(2, 2, [1, 2, 3]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn swap_identity_columns() {
        let mut m = ExactMatrix::identity(2);
        m.swap_cols(0, 1).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn swap_rows_is_an_involution() {
        let orig = ExactMatrix::new(2, 3, [1, 2, 3, 4, 5, 6]).unwrap();
        let mut m = orig.clone();
        m.swap_rows(0, 1).unwrap();
        assert_ne!(m, orig);
        m.swap_rows(0, 1).unwrap();
        assert_eq!(m, orig);
    }

    #[test]
    fn index_errors() {
        let mut m = ExactMatrix::zeros(2, 3);
        assert!(matches!(m.swap_rows(0, 2), Err(Error::Index { .. })));
        assert!(matches!(m.swap_cols(1, 1), Err(Error::InvalidInput(_))));
        assert!(m.negate_col(3).is_err());
        assert!(m.negate_row(2).is_err());
    }

    #[test]
    fn negation() {
        let mut m = ExactMatrix::from_rows(&[[-3]]);
        m.negate_col(0).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[3]]));
        let orig = ExactMatrix::from_rows(&[[1, -2], [0, 7]]);
        let mut m = orig.clone();
        m.negate_row(1).unwrap();
        m.negate_row(1).unwrap();
        assert_eq!(m, orig);
    }

    #[test]
    fn product_with_identity() {
        let m = ExactMatrix::new(2, 3, [1, -2, 3, 4, 0, 6]).unwrap();
        assert_eq!(ExactMatrix::identity(2).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&ExactMatrix::identity(3)).unwrap(), m);
        assert!(m.mul(&m).is_err());
    }

    #[test]
    fn transpose_in_place_matches_transpose() {
        let m = ExactMatrix::new(2, 3, [1, 2, 3, 4, 5, 6]).unwrap();
        let mut t = m.clone();
        t.transpose_in_place();
        assert_eq!(t, m.transpose());
        assert_eq!(t.get(2, 1), &big(6));
    }

    #[test]
    fn density() {
        let z = ExactMatrix::zeros(3, 2).density_stats();
        assert!(z.null_fraction.is_one());
        assert!(z.mean_abs_nonzero.is_zero());

        let d = ExactMatrix::from_rows(&[[2, 0], [0, -4]]).density_stats();
        assert_eq!(d.null_fraction, BigRational::new(big(1), big(2)));
        assert_eq!(d.mean_abs_nonzero, BigRational::from_integer(big(3)));
    }

    #[test]
    fn kernels() {
        let mut m = ExactMatrix::from_rows(&[[1, 2], [3, 4]]);
        m.shear_cols_unchecked(0, 1, &big(2));
        assert_eq!(m, ExactMatrix::from_rows(&[[1, 0], [3, -2]]));
        m.shear_rows_unchecked(0, 1, &big(3));
        assert_eq!(m, ExactMatrix::from_rows(&[[1, 0], [0, -2]]));
        let c = [big(0), big(1), big(1), big(0)];
        m.combine_cols_unchecked(0, 1, &c);
        assert_eq!(m, ExactMatrix::from_rows(&[[0, 1], [-2, 0]]));
        m.combine_rows_unchecked(1, 0, &c);
        assert_eq!(m, ExactMatrix::from_rows(&[[-2, 0], [0, 1]]));
    }

    #[test]
    fn digits() {
        assert_eq!(decimal_digits(&big(1)), 1.0);
        assert_eq!(decimal_digits(&big(-12345)), 5.0);
        let d = decimal_digits(&big(9));
        assert!((1.0..=2.0).contains(&d));
    }
}
