//! Config-driven experiment runner for `gloa-core`.
//!
//! An experiment file names an objective (benchmark function, Lennard-Jones
//! cluster or circuit synthesis target), optional engine overrides and a
//! repeat count; [`run_experiment`] executes the repeats and writes CSV
//! reports.

pub mod config;
pub mod error;
pub mod output;
pub mod presets;
pub mod runner;

pub use config::{load_config, parse_config, ExperimentConfig, ObjectiveConfig, Problem};
pub use error::{CliError, Result};
pub use runner::{run_experiment, ExperimentOutcome, FirstHit, RunRecord};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "GLOA_OUTPUT_DIR";
