//! Experiment runner, report emission and CLI support for
//! `kobayashi-core`.

pub mod config;
pub mod plots;
pub mod report;
pub mod runner;

pub use config::{ConfigError, ExperimentConfig, ExperimentKind};
pub use report::{ReportBundle, Row, Summary};
pub use runner::{run, write_outputs, RunError};
