use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::generate::{generate_instance, ExperimentConfig};
use crate::error::{Error, Result};
use crate::smith::{smith, SmithOptions, Variant};
use crate::tracked::Budget;

#[derive(Debug, Clone)]
pub struct ExperimentOptions {
    pub variants: Vec<Variant>,
    /// Per-variant budgets; missing variants use their default.
    pub budgets: BTreeMap<Variant, Budget>,
    /// Worker threads over instances; 1 runs everything on the caller.
    pub jobs: usize,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions {
            variants: Variant::ALL.to_vec(),
            budgets: BTreeMap::new(),
            jobs: 1,
        }
    }
}

impl ExperimentOptions {
    pub fn budget(&self, v: Variant) -> Budget {
        self.budgets
            .get(&v)
            .copied()
            .unwrap_or_else(|| v.default_budget())
    }
}

/// One instance solved by one variant.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub config: String,
    /// The instance seed.
    pub seed: u64,
    pub instance: usize,
    pub variant: Variant,
    pub wall_ms: f64,
    pub hnf_count: usize,
    /// `None` when the run did not finish.
    pub smith_runlength: Option<String>,
    pub verified: bool,
    pub exhausted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FirstInstance {
    pub null_percent: f64,
    pub mean_abs_nonzero: f64,
    pub nonzero: usize,
    pub planted_smith: String,
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub seed: u64,
    pub variants: Vec<Variant>,
    pub first: FirstInstance,
    /// Instance-major, variants in the requested order.
    pub records: Vec<RunRecord>,
}

impl ExperimentReport {
    pub fn records_for(&self, v: Variant) -> impl Iterator<Item = &RunRecord> + '_ {
        self.records.iter().filter(move |r| r.variant == v)
    }

    /// Wall time summed over instances.
    pub fn total(&self, v: Variant) -> Duration {
        Duration::from_secs_f64(self.records_for(v).map(|r| r.wall_ms).sum::<f64>() / 1000.0)
    }

    pub fn exhausted(&self, v: Variant) -> usize {
        self.records_for(v).filter(|r| r.exhausted).count()
    }

    /// Finished runs whose Smith form differs from the planted one.
    pub fn correctness_failures(&self) -> Vec<&RunRecord> {
        self.records
            .iter()
            .filter(|r| !r.exhausted && !r.verified)
            .collect()
    }

    pub fn any_exhausted(&self) -> bool {
        self.records.iter().any(|r| r.exhausted)
    }

    /// Number of instances per HNF pass count.
    pub fn pass_histogram(&self, v: Variant) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for r in self.records_for(v).filter(|r| !r.exhausted) {
            *h.entry(r.hnf_count).or_default() += 1;
        }
        h
    }

    /// Line-oriented text report. Without `timing` the output depends only
    /// on the inputs.
    pub fn to_text(&self, timing: bool) -> String {
        let mut s = String::new();
        let c = &self.config;
        let _ = writeln!(s, "config: {c}");
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(
            s,
            "first matrix: {:.3}% null, mean |nonzero| {:.3e}, {} nonzero",
            self.first.null_percent, self.first.mean_abs_nonzero, self.first.nonzero
        );
        let _ = writeln!(s, "first planted smith: {}", self.first.planted_smith);
        for r in &self.records {
            let _ = write!(s, "instance {} {}:", r.instance, r.variant);
            if timing {
                let _ = write!(s, " {:.1} ms,", r.wall_ms);
            }
            let _ = write!(s, " {} hnf,", r.hnf_count);
            let status = if r.exhausted {
                "budget exhausted"
            } else if r.verified {
                "verified"
            } else {
                "MISMATCH"
            };
            let _ = writeln!(
                s,
                " {status} {}",
                r.smith_runlength.as_deref().unwrap_or("-")
            );
        }
        for &v in &self.variants {
            let _ = write!(s, "{v}:");
            if timing {
                let _ = write!(s, " total {:.3} s,", self.total(v).as_secs_f64());
            }
            let done = self.records_for(v).filter(|r| !r.exhausted).count();
            let _ = write!(s, " {done}/{} finished", c.repetitions);
            if v == Variant::Kb3 {
                let hist: Vec<String> = self
                    .pass_histogram(v)
                    .iter()
                    .map(|(passes, n)| format!("{passes} hnf x{n}"))
                    .collect();
                if !hist.is_empty() {
                    let _ = write!(s, ", {}", hist.join(", "));
                }
            }
            let _ = writeln!(s);
        }
        s
    }

    /// One JSON object per line, per instance and variant.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r).map_err(|e| Error::Io(std::io::Error::other(e)))?;
            writeln!(w)?;
        }
        Ok(())
    }
}

pub fn run_experiment(
    config: &ExperimentConfig,
    seed: u64,
    opts: &ExperimentOptions,
) -> Result<ExperimentReport> {
    config.validate()?;
    let solve = |index: usize| -> Result<(Option<FirstInstance>, Vec<RunRecord>)> {
        let inst = generate_instance(config, seed, index)?;
        let first = (index == 0).then(|| {
            let stats = inst.matrix.density_stats();
            FirstInstance {
                null_percent: stats.null_percent(),
                mean_abs_nonzero: stats.mean_abs_f64(),
                nonzero: inst
                    .matrix
                    .iter_row_major()
                    .filter(|(_, _, v)| v.sign() != num_bigint::Sign::NoSign)
                    .count(),
                planted_smith: inst.planted_smith.to_string(),
            }
        });
        let mut records = Vec::with_capacity(opts.variants.len());
        for &variant in &opts.variants {
            let started = Instant::now();
            let outcome = smith(
                &inst.matrix,
                variant,
                SmithOptions {
                    budget: Some(opts.budget(variant)),
                    ..Default::default()
                },
            );
            let wall_ms = started.elapsed().as_secs_f64() * 1000.0;
            let record = match outcome {
                Ok(dec) => RunRecord {
                    config: config.to_string(),
                    seed: inst.seed,
                    instance: index,
                    variant,
                    wall_ms,
                    hnf_count: dec.stats.hnf_invocations,
                    verified: dec.run_length == inst.planted_smith,
                    smith_runlength: Some(dec.run_length.to_string()),
                    exhausted: false,
                },
                Err(Error::BudgetExhausted(_)) => RunRecord {
                    config: config.to_string(),
                    seed: inst.seed,
                    instance: index,
                    variant,
                    wall_ms,
                    hnf_count: 0,
                    smith_runlength: None,
                    verified: false,
                    exhausted: true,
                },
                Err(e) => return Err(e),
            };
            records.push(record);
        }
        Ok((first, records))
    };

    let results: Vec<_> = if opts.jobs <= 1 {
        (0..config.repetitions).map(solve).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start {} workers: {e}", opts.jobs)))?;
        pool.install(|| {
            (0..config.repetitions)
                .into_par_iter()
                .map(solve)
                .collect::<Result<_>>()
        })?
    };

    let mut first = None;
    let mut records = Vec::new();
    for (f, r) in results {
        first = first.or(f);
        records.extend(r);
    }
    Ok(ExperimentReport {
        config: *config,
        seed,
        variants: opts.variants.clone(),
        first: first.expect("at least one repetition"),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_config_verifies() {
        let c: ExperimentConfig = "3,10,15,8,9,30,5".parse().unwrap();
        let report = run_experiment(&c, 1, &ExperimentOptions::default()).unwrap();
        assert_eq!(report.records.len(), 9);
        assert!(
            report.records.iter().all(|r| r.verified && !r.exhausted),
            "{}",
            report.to_text(false)
        );
        assert!(report.correctness_failures().is_empty());
        let text = report.to_text(false);
        assert!(text.contains("KB3: 3/3 finished"), "{text}");
        assert_eq!(
            text,
            run_experiment(&c, 1, &ExperimentOptions::default())
                .unwrap()
                .to_text(false)
        );
    }

    #[test]
    fn parallel_matches_serial() {
        let c: ExperimentConfig = "4,6,8,5,9,20,5".parse().unwrap();
        let serial = run_experiment(&c, 3, &ExperimentOptions::default()).unwrap();
        let parallel = run_experiment(
            &c,
            3,
            &ExperimentOptions {
                jobs: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(serial.to_text(false), parallel.to_text(false));
    }

    #[test]
    fn forced_budget_is_recorded() {
        let c: ExperimentConfig = "1,12,16,10,20,100,10".parse().unwrap();
        let opts = ExperimentOptions {
            variants: vec![Variant::Kb1],
            budgets: [(Variant::Kb1, Budget::ops(10))].into(),
            jobs: 1,
        };
        let report = run_experiment(&c, 1, &opts).unwrap();
        assert!(report.records[0].exhausted);
        assert!(report.correctness_failures().is_empty());
        let mut out = Vec::new();
        report.write_jsonl(&mut out).unwrap();
        let line: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(line["variant"], "kb1");
        assert_eq!(line["exhausted"], true);
        assert_eq!(line["smith_runlength"], serde_json::Value::Null);
    }
}
