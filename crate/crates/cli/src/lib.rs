//! Command-line front-end: problem files, result reports, and the
//! pipeline-versus-oracle benchmark.

pub mod bench;
pub mod commands;
pub mod problem;
pub mod report;

pub use commands::{run_compute, run_verify, CliError, ComputeOptions, OutputFormat, VerifyLevel};
