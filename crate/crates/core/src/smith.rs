//! Smith reduction by three organizations of the Kannan-Bachem algorithm.
//!
//! * KB1: HNF-1, then for each diagonal position alternate row Bezout
//!   operations below the pivot (phase 1) with a fresh HNF-1 pass on the
//!   trailing block (phase 2) until the pivot's row and column are clear.
//!   The lower rectangle is never reduced, so its entries can grow without
//!   bound on hard input.
//! * KB2: KB1 plus, after each diagonal position is finished, a sweep of
//!   row shears reducing every entry below each remaining pivot modulo that
//!   pivot.
//! * KB3: alternate whole HNF-1 and HNF-2 passes until the matrix is
//!   diagonal. After the second pass the matrix is triangular with diagonal
//!   product equal to the GCD of the rank-size minors, and every later pass
//!   only moves factors down the diagonal, so the loop terminates.
//!
//! All three finish with divisor normalization.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bezout::OpLog;
use crate::error::{BudgetReport, Error, Result};
use crate::hermite::{column_pass, row_pass, HermiteStyle};
use crate::matrix::ExactMatrix;
use crate::oracle::{determinant, minor_count, minor_gcd_oracle};
use crate::tracked::{Budget, Exhausted, Tracked};

/// Default KB1 step budget, in elementary operations.
pub const KB1_DEFAULT_MAX_OPS: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Kb1,
    Kb2,
    Kb3,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Kb1, Variant::Kb2, Variant::Kb3];

    pub fn default_budget(self) -> Budget {
        match self {
            Variant::Kb1 => Budget::ops(KB1_DEFAULT_MAX_OPS),
            Variant::Kb2 | Variant::Kb3 => Budget::unlimited(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Kb1 => "KB1",
            Variant::Kb2 => "KB2",
            Variant::Kb3 => "KB3",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kb1" => Ok(Variant::Kb1),
            "kb2" => Ok(Variant::Kb2),
            "kb3" => Ok(Variant::Kb3),
            _ => Err(Error::InvalidInput(format!(
                "unknown variant `{s}`, expected kb1, kb2 or kb3"
            ))),
        }
    }
}

/// A canonical Smith diagonal grouped into runs of equal invariants,
/// rendered as `((m1 * v1) (m2 * v2) ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengthDiagonal {
    runs: Vec<(usize, BigInt)>,
    rank: usize,
    total_slots: usize,
}

impl RunLengthDiagonal {
    /// Groups a canonical diagonal: positive entries forming a divisor
    /// chain, optionally followed by zeros.
    pub fn from_diagonal(diag: &[BigInt]) -> Result<Self> {
        let rank = diag.iter().take_while(|d| d.is_positive()).count();
        if diag[rank..].iter().any(|d| !d.is_zero()) {
            return Err(Error::InvalidInput(
                "diagonal is not canonical: entries after the first zero must be zero".into(),
            ));
        }
        let mut runs: Vec<(usize, BigInt)> = Vec::new();
        for d in &diag[..rank] {
            match runs.last_mut() {
                Some((count, v)) if v == d => *count += 1,
                Some((_, v)) if !d.is_multiple_of(v) => {
                    return Err(Error::InvalidInput(format!(
                        "diagonal is not canonical: {v} does not divide {d}"
                    )))
                }
                _ => runs.push((1, d.clone())),
            }
        }
        Ok(RunLengthDiagonal {
            runs,
            rank,
            total_slots: diag.len(),
        })
    }

    /// Runs of `(multiplicity, value)`.
    pub fn runs(&self) -> &[(usize, BigInt)] {
        &self.runs
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn total_slots(&self) -> usize {
        self.total_slots
    }

    /// The positive invariant factors, expanded.
    pub fn invariants(&self) -> Vec<BigInt> {
        self.runs
            .iter()
            .flat_map(|(n, v)| std::iter::repeat_n(v.clone(), *n))
            .collect()
    }

    pub fn product(&self) -> BigInt {
        self.runs
            .iter()
            .map(|(n, v)| num_traits::pow(v.clone(), *n))
            .product()
    }
}

impl fmt::Display for RunLengthDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, (n, v)) in self.runs.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({n} * {v})")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SmithStats {
    /// Number of whole Hermite passes run (KB3), or HNF-1 passes including
    /// the phase-2 repairs (KB1, KB2).
    pub hnf_invocations: usize,
    /// KB3: one entry per Hermite pass. KB1/KB2: the initial HNF-1, then the
    /// whole second part.
    pub pass_durations: Vec<Duration>,
    /// Largest observed mean digit count below the diagonal.
    pub peak_mean_digits: f64,
    pub elementary_ops: u64,
}

#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    /// Canonical diagonal, same shape as the input.
    pub s: ExactMatrix,
    pub rank: usize,
    pub run_length: RunLengthDiagonal,
    /// Right factor (`cols x cols`): `s = v d u`.
    pub u: Option<ExactMatrix>,
    /// Left factor (`rows x rows`).
    pub v: Option<ExactMatrix>,
    pub op_log: Option<OpLog>,
    pub variant: Variant,
    pub stats: SmithStats,
}

impl SmithDecomposition {
    pub fn invariants(&self) -> Vec<BigInt> {
        self.run_length.invariants()
    }
}

/// Intermediate states reported to an observer.
#[derive(Debug)]
pub enum Checkpoint<'a> {
    /// A whole Hermite pass has just finished (KB3, and the initial HNF-1 of
    /// KB1/KB2).
    HermitePass {
        index: usize,
        style: HermiteStyle,
        rank: usize,
        matrix: &'a ExactMatrix,
    },
    /// KB1/KB2: row and column `column` are clear (and, for KB2, the
    /// lower-rectangle sweep has run).
    ColumnDone {
        column: usize,
        rank: usize,
        matrix: &'a ExactMatrix,
    },
}

pub type Observer<'a> = &'a mut dyn FnMut(Checkpoint<'_>);

#[derive(Default)]
pub struct SmithOptions<'a> {
    pub transforms: bool,
    pub record_ops: bool,
    /// `None` selects the variant's default budget.
    pub budget: Option<Budget>,
    pub observer: Option<Observer<'a>>,
}

impl SmithOptions<'_> {
    pub fn with_transforms() -> Self {
        SmithOptions {
            transforms: true,
            ..Default::default()
        }
    }
}

pub fn smith_kb1(m: &ExactMatrix, with_transforms: bool) -> Result<SmithDecomposition> {
    smith(m, Variant::Kb1, transforms_only(with_transforms))
}

pub fn smith_kb2(m: &ExactMatrix, with_transforms: bool) -> Result<SmithDecomposition> {
    smith(m, Variant::Kb2, transforms_only(with_transforms))
}

pub fn smith_kb3(m: &ExactMatrix, with_transforms: bool) -> Result<SmithDecomposition> {
    smith(m, Variant::Kb3, transforms_only(with_transforms))
}

fn transforms_only(transforms: bool) -> SmithOptions<'static> {
    SmithOptions {
        transforms,
        ..Default::default()
    }
}

pub fn smith(
    m: &ExactMatrix,
    variant: Variant,
    mut opts: SmithOptions<'_>,
) -> Result<SmithDecomposition> {
    let budget = opts.budget.unwrap_or_else(|| variant.default_budget());
    let mut t = Tracked::new(m.clone(), opts.transforms, opts.record_ops, budget);
    let mut run = Run {
        stats: SmithStats::default(),
        columns_done: 0,
        rank: 0,
        observer: opts.observer.take(),
    };

    let outcome = match variant {
        Variant::Kb1 => run.kb12(&mut t, false),
        Variant::Kb2 => run.kb12(&mut t, true),
        Variant::Kb3 => run.kb3(&mut t),
    }
    .and_then(|()| normalize_diagonal(&mut t));

    run.stats.elementary_ops = t.meter.ops;
    let elapsed = t.meter.started.elapsed();
    let parts = t.into_parts();

    if outcome.is_err() {
        let mean_digits = parts.matrix.mean_digits_below_diagonal(run.rank);
        return Err(Error::BudgetExhausted(Box::new(BudgetReport {
            variant,
            elementary_ops: run.stats.elementary_ops,
            elapsed,
            columns_processed: run.columns_done,
            rank: run.rank,
            mean_digits,
            peak_mean_digits: run.stats.peak_mean_digits.max(mean_digits),
        })));
    }

    let s = parts.matrix;
    let run_length =
        RunLengthDiagonal::from_diagonal(&s.diagonal()).expect("normalization is canonical");
    Ok(SmithDecomposition {
        rank: run_length.rank(),
        run_length,
        s,
        u: parts.right,
        v: parts.left,
        op_log: parts.log,
        variant,
        stats: run.stats,
    })
}

struct Run<'o> {
    stats: SmithStats,
    columns_done: usize,
    rank: usize,
    observer: Option<Observer<'o>>,
}

impl Run<'_> {
    fn notify(&mut self, c: Checkpoint<'_>) {
        if let Some(obs) = self.observer.as_mut() {
            obs(c);
        }
    }

    fn track_digits(&mut self, m: &ExactMatrix) {
        let d = m.mean_digits_below_diagonal(self.rank);
        if d > self.stats.peak_mean_digits {
            self.stats.peak_mean_digits = d;
        }
    }

    fn kb12(&mut self, t: &mut Tracked, sweep: bool) -> Result<(), Exhausted> {
        let (n, m) = t.dims();
        let started = Instant::now();
        let k = column_pass(t, 0)?;
        self.rank = k;
        self.stats.hnf_invocations = 1;
        self.stats.pass_durations.push(started.elapsed());
        self.notify(Checkpoint::HermitePass {
            index: 0,
            style: HermiteStyle::Column,
            rank: k,
            matrix: &t.m,
        });
        self.track_digits(&t.m);
        t.tighten();

        let started = Instant::now();
        for i in 0..k {
            loop {
                // Phase 1: clear the column below the pivot with row Bezout
                // operations.
                for j in i + 1..n {
                    t.cancel_in_col(i, i, j)?;
                }
                if (i + 1..m).all(|c| t.at(i, c).is_zero()) {
                    break;
                }
                // Phase 2: the pivot row picked up entries; run HNF-1 again
                // on the trailing block.
                let rank = column_pass(t, i)?;
                debug_assert_eq!(rank, k);
                self.stats.hnf_invocations += 1;
                if (i + 1..n).all(|r| t.at(r, i).is_zero()) {
                    break;
                }
            }
            if sweep {
                // Right to left, so a row shear never disturbs a column
                // already reduced.
                for c in (i + 1..k).rev() {
                    for r in c + 1..n {
                        t.residue_in_col(c, c, r)?;
                    }
                }
            }
            self.columns_done = i + 1;
            self.track_digits(&t.m);
            self.notify(Checkpoint::ColumnDone {
                column: i,
                rank: k,
                matrix: &t.m,
            });
        }
        self.stats.pass_durations.push(started.elapsed());
        Ok(())
    }

    fn kb3(&mut self, t: &mut Tracked) -> Result<(), Exhausted> {
        let mut style = HermiteStyle::Column;
        loop {
            let started = Instant::now();
            let k = match style {
                HermiteStyle::Column => column_pass(t, 0)?,
                HermiteStyle::Row => row_pass(t, 0)?,
            };
            self.rank = k;
            self.stats.pass_durations.push(started.elapsed());
            let index = self.stats.hnf_invocations;
            self.stats.hnf_invocations += 1;
            self.notify(Checkpoint::HermitePass {
                index,
                style,
                rank: k,
                matrix: &t.m,
            });
            if t.m.is_diagonal() {
                return Ok(());
            }
            debug_assert!(match style {
                HermiteStyle::Column => t.m.is_lower_triangular(),
                HermiteStyle::Row => t.m.is_upper_triangular(),
            });
            style = match style {
                HermiteStyle::Column => HermiteStyle::Row,
                HermiteStyle::Row => HermiteStyle::Column,
            };
        }
    }
}

/// Signs, zero placement and pairwise gcd/lcm sweeps on a diagonal matrix.
fn normalize_diagonal(t: &mut Tracked) -> Result<(), Exhausted> {
    let (n, m) = t.dims();
    let d = n.min(m);
    for i in 0..d {
        if t.at(i, i).is_negative() {
            t.negate_col(i)?;
        }
    }
    let mut filled = 0;
    for i in 0..d {
        if !t.at(i, i).is_zero() {
            if i != filled {
                t.swap_rows(i, filled)?;
                t.swap_cols(i, filled)?;
            }
            filled += 1;
        }
    }
    loop {
        let mut changed = false;
        for i in 0..filled {
            for j in i + 1..filled {
                changed |= t.normalize_pair(i, j)?;
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// Brings a diagonal matrix to canonical Smith form in place.
pub fn divisor_normalize(d: &mut ExactMatrix, log: Option<&mut OpLog>) -> Result<()> {
    if !d.is_diagonal() {
        return Err(Error::InvalidInput(
            "divisor normalization needs a diagonal matrix".into(),
        ));
    }
    let mut t = Tracked::borrow(d, log.is_some());
    normalize_diagonal(&mut t).expect("no budget");
    let parts = t.into_parts();
    *d = parts.matrix;
    if let (Some(log), Some(ops)) = (log, parts.log) {
        log.ops.extend(ops.ops);
    }
    Ok(())
}

/// Canonical Smith invariants of a diagonal, computed by gcd/lcm
/// normalization.
pub fn canonical_invariants(diag: &[BigInt]) -> Vec<BigInt> {
    let n = diag.len();
    let mut d = ExactMatrix::from_diagonal(n, n, diag);
    divisor_normalize(&mut d, None).expect("diagonal");
    d.diagonal()
        .into_iter()
        .take_while(|v| v.is_positive())
        .collect()
}

/// Outcome of [`verify_decomposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationReport {
    /// `s = v d u` exactly.
    pub equivalence: bool,
    /// `|det u| = |det v| = 1`.
    pub unimodular: bool,
    /// `s` is diagonal with a positive divisor chain followed by zeros.
    pub divisor_chain: bool,
    /// Product of invariants equals the GCD of the rank-size minors of `d`;
    /// `None` when `d` is too large to enumerate its minors.
    pub minor_gcd: Option<bool>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.equivalence && self.unimodular && self.divisor_chain && self.minor_gcd != Some(false)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "equivalence s = v d u: {}", mark(self.equivalence))?;
        writeln!(f, "unimodular u, v: {}", mark(self.unimodular))?;
        writeln!(f, "divisor chain: {}", mark(self.divisor_chain))?;
        match self.minor_gcd {
            Some(ok) => write!(f, "minor gcd: {}", mark(ok)),
            None => write!(f, "minor gcd: skipped"),
        }
    }
}

/// Largest number of minors [`verify_decomposition`] will enumerate.
pub const MINOR_CHECK_LIMIT: u128 = 20_000;

pub fn verify_decomposition(
    d: &ExactMatrix,
    dec: &SmithDecomposition,
) -> Result<VerificationReport> {
    let (Some(u), Some(v)) = (&dec.u, &dec.v) else {
        return Err(Error::InvalidInput(
            "decomposition carries no transforms".into(),
        ));
    };
    verify_factors(d, &dec.s, u, v)
}

/// Checks `s = v d u` for explicitly given factors.
pub fn verify_factors(
    d: &ExactMatrix,
    s: &ExactMatrix,
    u: &ExactMatrix,
    v: &ExactMatrix,
) -> Result<VerificationReport> {
    let (n, m) = d.dims();
    if s.dims() != (n, m) || u.dims() != (m, m) || v.dims() != (n, n) {
        return Err(Error::Dimension(format!(
            "expected s {n}x{m}, u {m}x{m}, v {n}x{n}; got s {}x{}, u {}x{}, v {}x{}",
            s.rows(),
            s.cols(),
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let equivalence = &v.mul(d)?.mul(u)? == s;
    let unit = |x: &BigInt| x.abs().is_one();
    let unimodular = unit(&determinant(u)?) && unit(&determinant(v)?);
    let chain = s
        .is_diagonal()
        .then(|| RunLengthDiagonal::from_diagonal(&s.diagonal()).ok())
        .flatten();
    let divisor_chain = chain.is_some();
    let minor_gcd = match &chain {
        Some(rl) if minor_count(n, m, rl.rank()) <= MINOR_CHECK_LIMIT => {
            Some(minor_gcd_oracle(d, rl.rank())? == rl.product())
        }
        _ => None,
    };
    Ok(VerificationReport {
        equivalence,
        unimodular,
        divisor_chain,
        minor_gcd,
    })
}

/// Renders durations as whole seconds joined by ` - `.
pub fn format_pass_times(durations: &[Duration]) -> String {
    durations
        .iter()
        .map(|d| d.as_secs().to_string())
        .collect::<Vec<_>>()
        .join(" - ")
}
