//! File formats, experiment runner and output writers for `cds-core`.
//!
//! The `cds` binary in this crate exposes everything on the command line.

pub mod config;
pub mod error;
pub mod experiment;
pub mod formats;
pub mod output;

pub use config::ExperimentConfig;
pub use error::{BenchError, Result};
pub use experiment::{run_experiment, ExperimentOutcome, ExperimentRecord, TrialRecord};
