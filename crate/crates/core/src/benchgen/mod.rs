//! Seeded benchmark matrices with planted Smith forms, and the experiment
//! driver that times the three variants on them.
//!
//! A planted instance starts from a diagonal of random positive entries and
//! is scrambled by elementary steps that preserve equivalence, so its Smith
//! form is known in advance.

mod experiment;
mod generate;
pub mod rng;

pub use experiment::{
    run_experiment, ExperimentOptions, ExperimentReport, FirstInstance, RunRecord,
};
pub use generate::{elementary_step, generate_instance, ExperimentConfig, GeneratedInstance};
pub use rng::BenchRng;
