//! Extended GCD with size-minimal coefficients and the unimodular two-line
//! operations built from it.
//!
//! Column operations right-multiply the matrix, row operations
//! left-multiply it. Every operation can be appended to an [`OpLog`], from
//! which the accumulated unimodular factors (and their inverses) can be
//! rebuilt afterwards.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// `a p + b q = r` with `r = gcd(a, b) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl BezoutTriple {
    /// True when the relation is `sign(a) a + 0 b = |a|`, i.e. `a` divides `b`.
    pub fn is_trivial(&self) -> bool {
        self.q.is_zero() && self.p.abs().is_one()
    }

    /// Coefficients `[p, q, -b/r, a/r]` of the 2x2 unimodular block.
    pub fn coefficients(&self) -> [BigInt; 4] {
        [
            self.p.clone(),
            self.q.clone(),
            -(&self.b / &self.r),
            &self.a / &self.r,
        ]
    }
}

/// Extended GCD whose coefficients satisfy `|p| <= |b|/r` and `|q| < |a|/r`.
///
/// When `a` divides `b` (including `b = 0`) the result is exactly
/// `(sign(a), 0, |a|)`; when `a = 0` it is `(0, sign(b), |b|)`. Otherwise
/// there are at most two admissible pairs; the one with `p >= 0` is taken,
/// then the one with `q >= 0`.
pub fn extended_gcd_minimal(a: &BigInt, b: &BigInt) -> Result<BezoutTriple> {
    let triple = |p: BigInt, q: BigInt, r: BigInt| BezoutTriple {
        a: a.clone(),
        b: b.clone(),
        p,
        q,
        r,
    };
    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::InvalidInput("gcd of (0, 0) is undefined".into()));
        }
        return Ok(triple(BigInt::zero(), b.signum(), b.abs()));
    }
    if b.is_multiple_of(a) {
        return Ok(triple(a.signum(), BigInt::zero(), a.abs()));
    }

    let eg = a.extended_gcd(b);
    let r = eg.gcd;
    let a_r = (a / &r).abs();
    let b_r = b / &r;

    // q runs through q0 + t a/r; the admissible q lie in (-|a|/r, |a|/r).
    let q_hi = eg.y.mod_floor(&a_r);
    debug_assert!(!q_hi.is_zero(), "a does not divide b, so q is never 0");
    let p_of = |q: &BigInt| (&r - b * q) / a;
    let hi = (p_of(&q_hi), q_hi.clone());
    let q_lo = &q_hi - &a_r;
    let lo = (p_of(&q_lo), q_lo);

    let b_bound = b_r.abs();
    let fits = |pq: &(BigInt, BigInt)| pq.0.abs() <= b_bound;
    let chosen = match (fits(&hi), fits(&lo)) {
        (true, true) => pick(hi, lo),
        (true, false) => hi,
        (false, true) => lo,
        (false, false) => unreachable!("minimal Bezout coefficients always exist"),
    };
    Ok(triple(chosen.0, chosen.1, r))
}

fn pick(x: (BigInt, BigInt), y: (BigInt, BigInt)) -> (BigInt, BigInt) {
    let key = |pq: &(BigInt, BigInt)| (pq.0.is_negative(), pq.1.is_negative());
    if key(&y) < key(&x) {
        y
    } else {
        x
    }
}

/// Which side of the matrix an operation multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Row operation, `M <- E M`.
    Left,
    /// Column operation, `M <- M F`.
    Right,
}

impl Side {
    pub(crate) fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    ColumnBezout,
    RowBezout,
    ColumnShear,
    RowShear,
    SwapRows,
    SwapCols,
    NegateRow,
    NegateCol,
}

/// One unimodular elementary operation.
///
/// `Combine` with coefficients `[x, y, z, w]` maps lines `i, j` to
/// `x L_i + y L_j` and `z L_i + w L_j`. `Shear` replaces line `j` by
/// `L_j - alpha L_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operation {
    Combine {
        side: Side,
        i: usize,
        j: usize,
        coeffs: Box<[BigInt; 4]>,
    },
    Shear {
        side: Side,
        i: usize,
        j: usize,
        alpha: BigInt,
    },
    Swap {
        side: Side,
        i: usize,
        j: usize,
    },
    Negate {
        side: Side,
        i: usize,
    },
}

impl Operation {
    pub fn side(&self) -> Side {
        match self {
            Operation::Combine { side, .. }
            | Operation::Shear { side, .. }
            | Operation::Swap { side, .. }
            | Operation::Negate { side, .. } => *side,
        }
    }

    pub fn kind(&self) -> OpKind {
        match (self, self.side()) {
            (Operation::Combine { .. }, Side::Right) => OpKind::ColumnBezout,
            (Operation::Combine { .. }, Side::Left) => OpKind::RowBezout,
            (Operation::Shear { .. }, Side::Right) => OpKind::ColumnShear,
            (Operation::Shear { .. }, Side::Left) => OpKind::RowShear,
            (Operation::Swap { .. }, Side::Right) => OpKind::SwapCols,
            (Operation::Swap { .. }, Side::Left) => OpKind::SwapRows,
            (Operation::Negate { .. }, Side::Right) => OpKind::NegateCol,
            (Operation::Negate { .. }, Side::Left) => OpKind::NegateRow,
        }
    }

    pub(crate) fn mirrored(mut self) -> Operation {
        match &mut self {
            Operation::Combine { side, .. }
            | Operation::Shear { side, .. }
            | Operation::Swap { side, .. }
            | Operation::Negate { side, .. } => *side = side.flip(),
        }
        self
    }

    /// Applies the operation to `m` on its own side.
    pub fn apply(&self, m: &mut ExactMatrix) {
        match (self, self.side()) {
            (Operation::Combine { i, j, coeffs, .. }, Side::Right) => {
                m.combine_cols_unchecked(*i, *j, coeffs)
            }
            (Operation::Combine { i, j, coeffs, .. }, Side::Left) => {
                m.combine_rows_unchecked(*i, *j, coeffs)
            }
            (Operation::Shear { i, j, alpha, .. }, Side::Right) => {
                m.shear_cols_unchecked(*i, *j, alpha)
            }
            (Operation::Shear { i, j, alpha, .. }, Side::Left) => {
                m.shear_rows_unchecked(*i, *j, alpha)
            }
            (Operation::Swap { i, j, .. }, Side::Right) => m.swap_cols_unchecked(*i, *j),
            (Operation::Swap { i, j, .. }, Side::Left) => m.swap_rows_unchecked(*i, *j),
            (Operation::Negate { i, .. }, Side::Right) => m.negate_col_unchecked(*i),
            (Operation::Negate { i, .. }, Side::Left) => m.negate_row_unchecked(*i),
        }
    }

    /// Like [`Self::apply`], for a matrix whose lines are zero past their
    /// first `len` entries: rows past `len` for a column operation, columns
    /// past `len` for a row operation.
    pub(crate) fn apply_within(&self, m: &mut ExactMatrix, len: usize) {
        match (self, self.side()) {
            (Operation::Combine { i, j, coeffs, .. }, Side::Right) => {
                m.combine_cols_within(*i, *j, coeffs, len)
            }
            (Operation::Combine { i, j, coeffs, .. }, Side::Left) => {
                m.combine_rows_within(*i, *j, coeffs, len)
            }
            (Operation::Shear { i, j, alpha, .. }, Side::Right) => {
                m.shear_cols_within(*i, *j, alpha, len)
            }
            (Operation::Shear { i, j, alpha, .. }, Side::Left) => {
                m.shear_rows_within(*i, *j, alpha, len)
            }
            _ => self.apply(m),
        }
    }

    /// The operation on the opposite side that multiplies by the same factor
    /// matrix.
    pub fn on_other_side(&self) -> Operation {
        match self {
            Operation::Combine { side, i, j, coeffs } => {
                let [x, y, z, w] = &**coeffs;
                Operation::Combine {
                    side: side.flip(),
                    i: *i,
                    j: *j,
                    coeffs: Box::new([x.clone(), z.clone(), y.clone(), w.clone()]),
                }
            }
            Operation::Shear { side, i, j, alpha } => Operation::Shear {
                side: side.flip(),
                i: *j,
                j: *i,
                alpha: alpha.clone(),
            },
            other => other.clone().mirrored(),
        }
    }

    /// The inverse operation (same side).
    pub fn inverse(&self) -> Operation {
        match self {
            Operation::Combine { side, i, j, coeffs } => {
                // The line map [[x, y], [z, w]] has determinant +-1.
                let [x, y, z, w] = &**coeffs;
                let det = x * w - y * z;
                debug_assert!(det.abs().is_one());
                let inv = if det.is_one() {
                    [w.clone(), -y, -z, x.clone()]
                } else {
                    [-w, y.clone(), z.clone(), -x]
                };
                Operation::Combine {
                    side: *side,
                    i: *i,
                    j: *j,
                    coeffs: Box::new(inv),
                }
            }
            Operation::Shear { side, i, j, alpha } => Operation::Shear {
                side: *side,
                i: *i,
                j: *j,
                alpha: -alpha,
            },
            other => other.clone(),
        }
    }

    /// The dense `dim x dim` unimodular factor of the operation.
    pub fn factor(&self, dim: usize) -> ExactMatrix {
        let mut f = ExactMatrix::identity(dim);
        self.apply(&mut f);
        f
    }
}

/// An ordered record of operations applied to a matrix of fixed shape.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpLog {
    pub ops: Vec<Operation>,
}

impl OpLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, op: Operation) {
        self.ops.push(op);
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Re-applies every operation, in order, to a copy of `original`.
    pub fn replay(&self, original: &ExactMatrix) -> ExactMatrix {
        let mut m = original.clone();
        for op in &self.ops {
            op.apply(&mut m);
        }
        m
    }

    /// The accumulated left factor `V = E_t ... E_1` (size `rows`).
    pub fn left_factor(&self, rows: usize) -> ExactMatrix {
        let mut v = ExactMatrix::identity(rows);
        for op in self.ops.iter().filter(|op| op.side() == Side::Left) {
            op.apply(&mut v);
        }
        v
    }

    /// The accumulated right factor `U = F_1 ... F_t` (size `cols`).
    pub fn right_factor(&self, cols: usize) -> ExactMatrix {
        let mut u = ExactMatrix::identity(cols);
        for op in self.ops.iter().filter(|op| op.side() == Side::Right) {
            op.apply(&mut u);
        }
        u
    }

    /// `V^{-1} = E_1^{-1} ... E_t^{-1}`, built by right-multiplying the
    /// inverses in log order.
    pub fn left_factor_inverse(&self, rows: usize) -> ExactMatrix {
        let mut w = ExactMatrix::identity(rows);
        for op in self.ops.iter().filter(|op| op.side() == Side::Left) {
            op.inverse().on_other_side().apply(&mut w);
        }
        w
    }

    /// `U^{-1} X` without forming `U^{-1}`: the inverse of each column
    /// operation is applied, in log order, as a row operation on `X`.
    pub fn solve_right_factor(&self, x: &ExactMatrix) -> ExactMatrix {
        let mut y = x.clone();
        for op in self.ops.iter().filter(|op| op.side() == Side::Right) {
            op.inverse().on_other_side().apply(&mut y);
        }
        y
    }
}

fn record(log: Option<&mut OpLog>, op: Operation) {
    if let Some(log) = log {
        log.push(op);
    }
}

/// Right-multiplies `m` by the column Bezout matrix built from `t`, where
/// `t` relates `a = m[i][i]` and `b = m[i][j]`: afterwards `m[i][i] = r` and
/// `m[i][j] = 0`.
pub fn apply_column_bezout(
    m: &mut ExactMatrix,
    i: usize,
    j: usize,
    t: &BezoutTriple,
    log: Option<&mut OpLog>,
) -> Result<()> {
    m.check_col_pair(i, j)?;
    if i >= m.rows() {
        return Err(Error::Index {
            axis: "row",
            index: i,
            bound: m.rows(),
        });
    }
    if m.get(i, i) != &t.a || m.get(i, j) != &t.b {
        return Err(Error::InvalidInput(format!(
            "Bezout triple for ({}, {}) does not match entries ({}, {})",
            t.a,
            t.b,
            m.get(i, i),
            m.get(i, j)
        )));
    }
    let op = Operation::Combine {
        side: Side::Right,
        i,
        j,
        coeffs: Box::new(t.coefficients()),
    };
    op.apply(m);
    record(log, op);
    Ok(())
}

/// Left-multiplies `m` by the row Bezout matrix built from `t`, where `t`
/// relates `a = m[i][i]` and `b = m[j][i]`.
pub fn apply_row_bezout(
    m: &mut ExactMatrix,
    i: usize,
    j: usize,
    t: &BezoutTriple,
    log: Option<&mut OpLog>,
) -> Result<()> {
    m.check_row_pair(i, j)?;
    if i >= m.cols() {
        return Err(Error::Index {
            axis: "column",
            index: i,
            bound: m.cols(),
        });
    }
    if m.get(i, i) != &t.a || m.get(j, i) != &t.b {
        return Err(Error::InvalidInput(format!(
            "Bezout triple for ({}, {}) does not match entries ({}, {})",
            t.a,
            t.b,
            m.get(i, i),
            m.get(j, i)
        )));
    }
    let op = Operation::Combine {
        side: Side::Left,
        i,
        j,
        coeffs: Box::new(t.coefficients()),
    };
    op.apply(m);
    record(log, op);
    Ok(())
}

/// `col_j <- col_j - alpha col_i`.
pub fn column_shear(
    m: &mut ExactMatrix,
    i: usize,
    j: usize,
    alpha: &BigInt,
    log: Option<&mut OpLog>,
) -> Result<()> {
    m.check_col_pair(i, j)?;
    let op = Operation::Shear {
        side: Side::Right,
        i,
        j,
        alpha: alpha.clone(),
    };
    op.apply(m);
    record(log, op);
    Ok(())
}

/// `row_j <- row_j - alpha row_i`.
pub fn row_shear(
    m: &mut ExactMatrix,
    i: usize,
    j: usize,
    alpha: &BigInt,
    log: Option<&mut OpLog>,
) -> Result<()> {
    m.check_row_pair(i, j)?;
    let op = Operation::Shear {
        side: Side::Left,
        i,
        j,
        alpha: alpha.clone(),
    };
    op.apply(m);
    record(log, op);
    Ok(())
}

/// Replaces the isolated diagonal pair `(a, b)` at `(i, i)`, `(j, j)` by
/// `(gcd, lcm)`.
pub fn divisor_normalize_pair(
    m: &mut ExactMatrix,
    i: usize,
    j: usize,
    log: Option<&mut OpLog>,
) -> Result<()> {
    m.check_row_pair(i, j)?;
    m.check_col_pair(i, j)?;
    for &d in &[i, j] {
        if !m.get(d, d).is_positive() {
            return Err(Error::InvalidInput(format!(
                "diagonal entry ({d}, {d}) = {} is not positive",
                m.get(d, d)
            )));
        }
        let isolated = (0..m.rows()).all(|r| r == d || m.get(r, d).is_zero())
            && (0..m.cols()).all(|c| c == d || m.get(d, c).is_zero());
        if !isolated {
            return Err(Error::InvalidInput(format!(
                "diagonal entry ({d}, {d}) is not alone in its row and column"
            )));
        }
    }
    let mut t = crate::tracked::Tracked::borrow(m, log.is_some());
    t.normalize_pair(i, j).expect("no budget");
    let parts = t.into_parts();
    *m = parts.matrix;
    if let (Some(log), Some(ops)) = (log, parts.log) {
        log.ops.extend(ops.ops);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
        let t = extended_gcd_minimal(&big(a), &big(b)).unwrap();
        let f = |v: &BigInt| i64::try_from(v).unwrap();
        (f(&t.p), f(&t.q), f(&t.r))
    }

    /// Enumerates every `(p, q)` in the bound box and applies the documented
    /// choice rule.
    fn brute_force(a: i64, b: i64) -> (i64, i64, i64) {
        let r = num_integer::gcd(a, b);
        if a != 0 && b % a == 0 {
            return (a.signum(), 0, a.abs());
        }
        if a == 0 {
            return (0, b.signum(), b.abs());
        }
        let (pb, qb) = ((b / r).abs(), (a / r).abs());
        let mut found = vec![];
        for p in -pb..=pb {
            for q in -(qb - 1)..qb {
                if a * p + b * q == r {
                    found.push((p, q));
                }
            }
        }
        assert!(!found.is_empty() && found.len() <= 2, "{a} {b} {found:?}");
        found.sort_by_key(|&(p, q)| (p < 0, q < 0));
        (found[0].0, found[0].1, r)
    }

    #[test]
    fn spec_cases() {
        let (p, q, r) = egcd(6, 4);
        assert_eq!(r, 2);
        assert_eq!(6 * p + 4 * q, 2);
        assert!(p.abs() <= 2 && q.abs() < 3);
        assert_eq!((p, q, r), brute_force(6, 4));
        assert_eq!(egcd(5, 10), (1, 0, 5));
        assert_eq!(egcd(0, -7), (0, -1, 7));
        assert_eq!(egcd(-3, 0), (-1, 0, 3));
        assert!(extended_gcd_minimal(&big(0), &big(0)).is_err());
    }

    #[test]
    fn matches_enumeration_on_a_grid() {
        for a in -60..=60 {
            for b in -60..=60 {
                if a == 0 && b == 0 {
                    continue;
                }
                assert_eq!(egcd(a, b), brute_force(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn bezout_identity_and_bounds_exhaustive() {
        for a in -1000i64..=1000 {
            for b in -1000i64..=1000 {
                if a == 0 && b == 0 {
                    continue;
                }
                let (p, q, r) = egcd(a, b);
                assert_eq!(a * p + b * q, r);
                assert_eq!(r, num_integer::gcd(a, b));
                if a != 0 && b != 0 && b % a != 0 {
                    assert!(p.abs() <= (b / r).abs(), "a={a} b={b} p={p}");
                    assert!(q.abs() < (a / r).abs(), "a={a} b={b} q={q}");
                }
            }
        }
    }

    #[test]
    fn column_bezout_on_triangular_block() {
        // [[a, b], [0, d]] -> [[r, 0], [d q, a d / r]]
        let (a, b, d) = (6, 4, 5);
        let mut m = ExactMatrix::from_rows(&[[a, b], [0, d]]);
        let t = extended_gcd_minimal(&big(a), &big(b)).unwrap();
        apply_column_bezout(&mut m, 0, 1, &t, None).unwrap();
        let (_, q, r) = egcd(a, b);
        assert_eq!(m, ExactMatrix::from_rows(&[[r, 0], [d * q, a * d / r]]));
    }

    #[test]
    fn column_bezout_dividing_pivot_is_a_shear() {
        let mut m = ExactMatrix::from_rows(&[[3, 6], [7, 11]]);
        let t = extended_gcd_minimal(&big(3), &big(6)).unwrap();
        assert!(t.is_trivial());
        apply_column_bezout(&mut m, 0, 1, &t, None).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[3, 0], [7, 11 - 14]]));
    }

    #[test]
    fn column_bezout_with_zero_target_is_identity() {
        let orig = ExactMatrix::from_rows(&[[4, 0], [1, 2]]);
        let mut m = orig.clone();
        let t = extended_gcd_minimal(&big(4), &big(0)).unwrap();
        apply_column_bezout(&mut m, 0, 1, &t, None).unwrap();
        assert_eq!(m, orig);
    }

    #[test]
    fn mismatched_triple_is_rejected() {
        let mut m = ExactMatrix::from_rows(&[[4, 6], [1, 2]]);
        let t = extended_gcd_minimal(&big(4), &big(5)).unwrap();
        assert!(apply_column_bezout(&mut m, 0, 1, &t, None).is_err());
    }

    #[test]
    fn row_bezout_cancels_below() {
        let mut m = ExactMatrix::from_rows(&[[6, 1], [4, 2]]);
        let t = extended_gcd_minimal(&big(6), &big(4)).unwrap();
        apply_row_bezout(&mut m, 0, 1, &t, None).unwrap();
        assert_eq!(m.get(0, 0), &big(2));
        assert!(m.get(1, 0).is_zero());

        let mut m = ExactMatrix::from_rows(&[[3, 1], [9, 2]]);
        let t = extended_gcd_minimal(&big(3), &big(9)).unwrap();
        apply_row_bezout(&mut m, 0, 1, &t, None).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[3, 1], [0, -1]]));
    }

    #[test]
    fn bezout_ops_agree_with_explicit_factors() {
        let m0 = ExactMatrix::from_rows(&[[6, 4], [9, 7]]);
        let mut m = m0.clone();
        let mut log = OpLog::new();
        let t = extended_gcd_minimal(&big(6), &big(4)).unwrap();
        apply_column_bezout(&mut m, 0, 1, &t, Some(&mut log)).unwrap();
        let a = m.get(0, 0).clone();
        let b = m.get(1, 0).clone();
        let t = extended_gcd_minimal(&a, &b).unwrap();
        apply_row_bezout(&mut m, 0, 1, &t, Some(&mut log)).unwrap();

        // Rebuild CB and RB as explicit factor matrices and multiply.
        let [p1, q1, nb1, ar1] = log.ops[0].clone().coeffs();
        let cb = ExactMatrix::new(2, 2, [p1, nb1, q1, ar1]).unwrap();
        let [p2, q2, nb2, ar2] = log.ops[1].clone().coeffs();
        let rb = ExactMatrix::new(2, 2, [p2, q2, nb2, ar2]).unwrap();
        let expected = rb.mul(&m0.mul(&cb).unwrap()).unwrap();
        assert_eq!(m, expected);
        assert_eq!(log.replay(&m0), m);
    }

    impl Operation {
        fn coeffs(self) -> [BigInt; 4] {
            match self {
                Operation::Combine { coeffs, .. } => *coeffs,
                _ => panic!("not a Bezout operation"),
            }
        }
    }

    #[test]
    fn shear_examples() {
        let orig = ExactMatrix::from_rows(&[[5, 17], [2, 3]]);
        let mut m = orig.clone();
        column_shear(&mut m, 0, 1, &big(0), None).unwrap();
        assert_eq!(m, orig);

        // Euclidean residue of the (0, 1) entry against the pivot 5.
        let q = big(17).div_floor(&big(5));
        column_shear(&mut m, 0, 1, &q, None).unwrap();
        assert_eq!(m.get(0, 1), &big(2));
        column_shear(&mut m, 0, 1, &-q, None).unwrap();
        assert_eq!(m, orig);

        let orig = ExactMatrix::from_rows(&[[5, 2], [-17, 3]]);
        let mut m = orig.clone();
        row_shear(&mut m, 0, 1, &big(0), None).unwrap();
        assert_eq!(m, orig);
        let q = big(-17).div_floor(&big(5));
        row_shear(&mut m, 0, 1, &q, None).unwrap();
        assert_eq!(m.get(1, 0), &big(3));
        row_shear(&mut m, 0, 1, &-q, None).unwrap();
        assert_eq!(m, orig);
        assert!(row_shear(&mut m, 1, 1, &big(1), None).is_err());
    }

    #[test]
    fn normalize_pair_examples() {
        let mut m = ExactMatrix::from_rows(&[[4, 0], [0, 6]]);
        divisor_normalize_pair(&mut m, 0, 1, None).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[2, 0], [0, 12]]));

        let mut m = ExactMatrix::from_rows(&[[3, 0], [0, 9]]);
        divisor_normalize_pair(&mut m, 0, 1, None).unwrap();
        assert_eq!(m, ExactMatrix::from_rows(&[[3, 0], [0, 9]]));

        let mut m = ExactMatrix::from_rows(&[[3, 1], [0, 9]]);
        assert!(divisor_normalize_pair(&mut m, 0, 1, None).is_err());
        let mut m = ExactMatrix::from_rows(&[[-3, 0], [0, 9]]);
        assert!(divisor_normalize_pair(&mut m, 0, 1, None).is_err());
    }

    #[test]
    fn normalize_pair_exhaustive() {
        for a in 1..=200i64 {
            for b in 1..=200i64 {
                let mut m = ExactMatrix::from_rows(&[[a, 0], [0, b]]);
                divisor_normalize_pair(&mut m, 0, 1, None).unwrap();
                let g = num_integer::gcd(a, b);
                let l = num_integer::lcm(a, b);
                assert_eq!(m, ExactMatrix::from_rows(&[[g, 0], [0, l]]), "a={a} b={b}");
                assert_eq!(g * l, a * b);
            }
        }
    }

    #[test]
    fn inverse_operations_undo() {
        let m0 = ExactMatrix::from_rows(&[[6, 4, 1], [9, 7, -2], [0, 5, 3]]);
        let t = extended_gcd_minimal(&big(6), &big(4)).unwrap();
        let ops = [
            Operation::Combine {
                side: Side::Right,
                i: 0,
                j: 1,
                coeffs: Box::new(t.coefficients()),
            },
            Operation::Combine {
                side: Side::Left,
                i: 2,
                j: 0,
                coeffs: Box::new(t.coefficients()),
            },
            Operation::Shear {
                side: Side::Left,
                i: 1,
                j: 2,
                alpha: big(-4),
            },
            Operation::Swap {
                side: Side::Right,
                i: 0,
                j: 2,
            },
            Operation::Negate {
                side: Side::Left,
                i: 1,
            },
        ];
        for op in &ops {
            let mut m = m0.clone();
            op.apply(&mut m);
            op.inverse().apply(&mut m);
            assert_eq!(m, m0, "{op:?}");
        }
    }
}
