use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::rng::{instance_seed, BenchRng};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::smith::{canonical_invariants, RunLengthDiagonal};

/// An experiment description, written as the 7-tuple
/// `repetitions,rows,cols,rank,diag_max,steps,alpha_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct ExperimentConfig {
    pub repetitions: usize,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Planted diagonal entries are uniform in `[1, diag_max]`.
    pub diag_max: u64,
    /// Number of elementary steps.
    pub steps: usize,
    /// Shear coefficients are uniform in `[-alpha_max, alpha_max]`.
    pub alpha_max: u64,
}

impl ExperimentConfig {
    pub fn new(
        repetitions: usize,
        rows: usize,
        cols: usize,
        rank: usize,
        diag_max: u64,
        steps: usize,
        alpha_max: u64,
    ) -> Result<Self> {
        let c = ExperimentConfig {
            repetitions,
            rows,
            cols,
            rank,
            diag_max,
            steps,
            alpha_max,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 || self.rows == 0 || self.cols == 0 || self.diag_max == 0 {
            return Err(Error::InvalidInput(format!(
                "config {self}: repetitions, rows, cols and diag_max must be positive"
            )));
        }
        if self.rank > self.rows.min(self.cols) {
            return Err(Error::InvalidInput(format!(
                "config {self}: rank exceeds min(rows, cols)"
            )));
        }
        if self.steps > 0 && (self.rows < 2 || self.cols < 2) {
            return Err(Error::InvalidInput(format!(
                "config {self}: elementary steps need at least 2 rows and 2 columns"
            )));
        }
        if self.alpha_max > i64::MAX as u64 || self.diag_max > i64::MAX as u64 {
            return Err(Error::InvalidInput(format!(
                "config {self}: bound too large"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ExperimentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{}",
            self.repetitions,
            self.rows,
            self.cols,
            self.rank,
            self.diag_max,
            self.steps,
            self.alpha_max
        )
    }
}

impl FromStr for ExperimentConfig {
    type Err = Error;

    /// Accepts commas and/or whitespace as separators, with optional
    /// surrounding parentheses: `10,100,300,80,20,300,10` or
    /// `(10 100 300 80 20 300 10)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let fields: Vec<&str> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 7 {
            return Err(Error::InvalidInput(format!(
                "config `{s}` must have 7 fields: repetitions,rows,cols,rank,diag_max,steps,alpha_max"
            )));
        }
        let mut v = [0u64; 7];
        for (slot, f) in v.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| {
                Error::InvalidInput(format!("config field `{f}` is not a nonnegative integer"))
            })?;
        }
        let count = |x: u64| {
            usize::try_from(x)
                .map_err(|_| Error::InvalidInput(format!("config field {x} is too large")))
        };
        ExperimentConfig::new(
            count(v[0])?,
            count(v[1])?,
            count(v[2])?,
            count(v[3])?,
            v[4],
            count(v[5])?,
            v[6],
        )
    }
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub matrix: ExactMatrix,
    /// The diagonal before scrambling, length `rank`.
    pub planted_diagonal: Vec<BigInt>,
    pub planted_smith: RunLengthDiagonal,
    pub seed: u64,
    pub index: usize,
}

/// One elementary step, five substeps in order: swap two columns; negate a
/// column and a row; add `alpha` times a row to another; swap two rows; add
/// `alpha` times a column to another.
pub fn elementary_step(m: &mut ExactMatrix, rng: &mut BenchRng, alpha_max: u64) -> Result<()> {
    let (rows, cols) = m.dims();
    if rows < 2 || cols < 2 {
        return Err(Error::InvalidInput(format!(
            "elementary step on a {rows}x{cols} matrix needs at least 2 rows and 2 columns"
        )));
    }
    let a = i64::try_from(alpha_max)
        .map_err(|_| Error::InvalidInput(format!("alpha bound {alpha_max} is too large")))?;

    let (c1, c2) = rng.distinct_pair(cols);
    m.swap_cols_unchecked(c1, c2);

    let c = rng.index(cols);
    let r = rng.index(rows);
    m.negate_col_unchecked(c);
    m.negate_row_unchecked(r);

    let (r1, r2) = rng.distinct_pair(rows);
    let alpha = rng.range_inclusive(-a, a);
    if alpha != 0 {
        m.shear_rows_unchecked(r1, r2, &BigInt::from(-alpha));
    }

    let (r1, r2) = rng.distinct_pair(rows);
    m.swap_rows_unchecked(r1, r2);

    let (c1, c2) = rng.distinct_pair(cols);
    let alpha = rng.range_inclusive(-a, a);
    if alpha != 0 {
        m.shear_cols_unchecked(c1, c2, &BigInt::from(-alpha));
    }
    Ok(())
}

/// Instance `index` of an experiment seeded with `seed`.
pub fn generate_instance(
    config: &ExperimentConfig,
    seed: u64,
    index: usize,
) -> Result<GeneratedInstance> {
    config.validate()?;
    let inst_seed = instance_seed(seed, index as u64);
    let mut rng = BenchRng::new(inst_seed);
    let diag_max = config.diag_max as i64;
    let planted_diagonal: Vec<BigInt> = (0..config.rank)
        .map(|_| BigInt::from(rng.range_inclusive(1, diag_max)))
        .collect();
    let mut matrix = ExactMatrix::from_diagonal(config.rows, config.cols, &planted_diagonal);
    for _ in 0..config.steps {
        elementary_step(&mut matrix, &mut rng, config.alpha_max)?;
    }
    let mut canonical = canonical_invariants(&planted_diagonal);
    canonical.resize(config.rows.min(config.cols), BigInt::from(0));
    let planted_smith = RunLengthDiagonal::from_diagonal(&canonical)?;
    Ok(GeneratedInstance {
        matrix,
        planted_diagonal,
        planted_smith,
        seed: inst_seed,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rank_oracle;
    use crate::smith::{smith, SmithOptions, Variant};

    #[test]
    fn parse_config() {
        let c: ExperimentConfig = "10,100,300,80,20,300,10".parse().unwrap();
        assert_eq!(
            c,
            ExperimentConfig::new(10, 100, 300, 80, 20, 300, 10).unwrap()
        );
        assert_eq!(c.to_string(), "10,100,300,80,20,300,10");
        let p: ExperimentConfig = "(10 100 300 80 20 300 10)".parse().unwrap();
        assert_eq!(p, c);
        for bad in [
            "1,2,3",
            "1,4,5,6,9,0,10",
            "0,4,5,3,9,0,10",
            "1,4,5,3,0,0,10",
            "1,4,5,x,9,0,10",
            "1,1,5,1,9,3,10",
        ] {
            assert!(bad.parse::<ExperimentConfig>().is_err(), "{bad}");
        }
    }

    #[test]
    fn zero_steps_gives_the_diagonal() {
        let c: ExperimentConfig = "1,4,5,3,9,0,10".parse().unwrap();
        let inst = generate_instance(&c, 11, 0).unwrap();
        assert_eq!(
            inst.matrix,
            ExactMatrix::from_diagonal(4, 5, &inst.planted_diagonal)
        );
        assert!(inst
            .planted_diagonal
            .iter()
            .all(|d| (1..=9).contains(&i64::try_from(d).unwrap())));
    }

    #[test]
    fn steps_preserve_smith_form_and_rank() {
        let mut rng = BenchRng::new(3);
        let mut m = ExactMatrix::from_diagonal(4, 5, &[1, 3, 9]);
        for _ in 0..10 {
            elementary_step(&mut m, &mut rng, 10).unwrap();
            assert_eq!(rank_oracle(&m), 3);
            let dec = smith(&m, Variant::Kb3, SmithOptions::default()).unwrap();
            assert_eq!(dec.run_length.to_string(), "((1 * 1) (1 * 3) (1 * 9))");
        }
    }

    #[test]
    fn alpha_zero_shears_are_noops() {
        let mut rng = BenchRng::new(9);
        let mut m = ExactMatrix::from_diagonal(3, 3, &[2, 5, 7]);
        for _ in 0..20 {
            elementary_step(&mut m, &mut rng, 0).unwrap();
        }
        // Only swaps and negations: every row and column keeps one entry.
        let mut abs: Vec<i64> = m
            .iter_row_major()
            .filter(|(_, _, v)| v.sign() != num_bigint::Sign::NoSign)
            .map(|(_, _, v)| i64::try_from(v).unwrap().abs())
            .collect();
        abs.sort();
        assert_eq!(abs, vec![2, 5, 7]);
    }

    #[test]
    fn degenerate_step_is_rejected() {
        let mut rng = BenchRng::new(0);
        let mut m = ExactMatrix::zeros(1, 4);
        assert!(elementary_step(&mut m, &mut rng, 3).is_err());
    }

    #[test]
    fn instances_are_reproducible_and_distinct() {
        let c: ExperimentConfig = "3,6,8,4,20,40,5".parse().unwrap();
        let a = generate_instance(&c, 1, 0).unwrap();
        let b = generate_instance(&c, 1, 0).unwrap();
        let other = generate_instance(&c, 1, 1).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert_ne!(a.matrix, other.matrix);
        assert_ne!(a.matrix, generate_instance(&c, 2, 0).unwrap().matrix);
    }
}
