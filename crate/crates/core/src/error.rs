use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::smith::Variant;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range for {axis} count {bound}")]
    Index {
        axis: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    BudgetExhausted(Box<BudgetReport>),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

/// Diagnostics captured when a reduction runs out of its step budget.
#[derive(Debug, Clone)]
pub struct BudgetReport {
    pub variant: Variant,
    pub elementary_ops: u64,
    pub elapsed: Duration,
    /// Diagonal positions fully processed by the second part of the reduction.
    pub columns_processed: usize,
    pub rank: usize,
    /// Mean decimal digit count of the entries below the diagonal at exhaustion.
    pub mean_digits: f64,
    pub peak_mean_digits: f64,
}

impl fmt::Display for BudgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} budget exhausted after {} operations ({:.1}s): {} of {} columns processed, \
             mean digits below diagonal {:.1} (peak {:.1})",
            self.variant,
            self.elementary_ops,
            self.elapsed.as_secs_f64(),
            self.columns_processed,
            self.rank,
            self.mean_digits,
            self.peak_mean_digits
        )
    }
}
