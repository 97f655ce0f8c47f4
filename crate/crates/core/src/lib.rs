//! Exact Hermite and Smith normal forms of integer matrices.
//!
//! The Smith reduction comes in three organizations of the Kannan-Bachem
//! algorithm ([`Variant`]), which differ only in how they control the growth
//! of intermediate entries. Homology groups of chain complexes are computed
//! on top of the Smith reduction, and [`benchgen`] produces scrambled test
//! matrices with known invariants.
//!
//! Indices in the API are 0-based. The matrix text format is 1-based.

pub mod benchgen;
pub mod bezout;
pub mod error;
pub mod hermite;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod smith;
mod tracked;

pub use bezout::{
    apply_column_bezout, apply_row_bezout, column_shear, divisor_normalize_pair,
    extended_gcd_minimal, row_shear, BezoutTriple, OpLog, Operation, Side,
};
pub use error::{BudgetReport, Error, Result};
pub use hermite::{hnf1, hnf2, HermiteOptions, HermiteResult, HermiteStyle};
pub use homology::{homology_group, HomologyResult};
pub use matrix::{DensityStats, ExactMatrix};
pub use smith::{
    divisor_normalize, smith, smith_kb1, smith_kb2, smith_kb3, verify_decomposition, Checkpoint,
    RunLengthDiagonal, SmithDecomposition, SmithOptions, SmithStats, Variant, VerificationReport,
};
pub use tracked::Budget;

pub use num_bigint::BigInt;
