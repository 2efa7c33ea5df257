//! `compute` and `verify`, independent of argument parsing so they can be
//! driven from tests.

use std::fs;
use std::path::Path;

use idealgb::oracle::certify;
use idealgb::{groebner_hermite_with, groebner_lagrange, GroebnerResult, HermiteOptions, InterpolationProblem, Point};
use thiserror::Error;

use crate::problem::ProblemFile;
use crate::report::{certificate_summary, render_text, ResultFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid problem: {0}")]
    Invalid(String),
    /// The computation finished but its certificate failed. Carries the
    /// full report so it can still be printed.
    #[error("certification failed: {summary}")]
    Uncertified { summary: String, report: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn from_core(e: idealgb::Error) -> Self {
        match e {
            idealgb::Error::Parse(p) => CliError::Parse(p.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 1,
            CliError::Invalid(_) => 2,
            CliError::Uncertified { .. } => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyLevel {
    None,
    /// Structural checks plus vanishing of every generator on every functional.
    #[default]
    Spairs,
    /// As `Spairs`, plus comparison against Buchberger-Moller (point sets only).
    Oracle,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComputeOptions {
    pub format: OutputFormat,
    pub verify: VerifyLevel,
    pub skip_d_invariance: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn solve(problem: &InterpolationProblem, opts: &ComputeOptions) -> Result<GroebnerResult, CliError> {
    if problem.is_lagrange() {
        let points: Vec<Point> = problem.conditions().iter().map(|c| c.point.clone()).collect();
        groebner_lagrange(&points, problem.ordering())
    } else {
        groebner_hermite_with(problem, HermiteOptions { check_d_invariance: !opts.skip_d_invariance })
    }
    .map_err(CliError::from_core)
}

/// Computes the basis for the problem in `text` and returns the rendered
/// output. Nothing is returned on failure, so callers never print a partial
/// report.
pub fn compute_str(text: &str, opts: &ComputeOptions) -> Result<String, CliError> {
    let file = ProblemFile::from_json(text)?;
    let problem = file.to_problem()?;
    if opts.verify == VerifyLevel::Oracle && !problem.is_lagrange() {
        return Err(CliError::Invalid(
            "--verify oracle requires a point-evaluation problem (every functional must be \"1\")".into(),
        ));
    }
    let mut result = solve(&problem, opts)?;
    if opts.verify != VerifyLevel::None {
        result.certificate = Some(certify(&result, &problem, opts.verify == VerifyLevel::Oracle));
    }
    let report = match opts.format {
        OutputFormat::Text => render_text(&file, &result),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&ResultFile::new(&file, &result)).expect("serializable");
            s.push('\n');
            s
        }
    };
    match &result.certificate {
        Some(c) if !c.is_certified() => Err(CliError::Uncertified { summary: certificate_summary(c), report }),
        _ => Ok(report),
    }
}

pub fn run_compute(path: &Path, opts: &ComputeOptions) -> Result<String, CliError> {
    compute_str(&read(path)?, opts)
}

/// Re-certifies a JSON result against the problem embedded in it.
pub fn verify_str(text: &str) -> Result<String, CliError> {
    let file: ResultFile = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("{} (line {}, column {})", e, e.line(), e.column())))?;
    if file.problem.variables != file.variables {
        return Err(CliError::Invalid("result variables differ from the embedded problem".into()));
    }
    let problem = file.problem.to_problem()?;
    let result = file.to_result()?;
    if result.ordering != *problem.ordering() {
        return Err(CliError::Invalid("result ordering differs from the embedded problem".into()));
    }
    let cert = certify(&result, &problem, true);
    let summary = certificate_summary(&cert);
    if cert.is_certified() {
        Ok(format!("{summary}\n"))
    } else {
        Err(CliError::Uncertified { report: format!("{summary}\n"), summary })
    }
}

pub fn run_verify(path: &Path) -> Result<String, CliError> {
    verify_str(&read(path)?)
}
