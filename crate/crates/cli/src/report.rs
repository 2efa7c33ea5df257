//! Result documents: human-readable text and the JSON schema read back by
//! `verify`.

use std::fmt::Write as _;

use idealgb::oracle::Certificate;
use idealgb::staircase::{LowerSet, StaircaseCorners};
use idealgb::{parse_polynomial, ExponentVector, GroebnerResult, MonomialOrdering, Polynomial};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::commands::CliError;
use crate::problem::{OrderingSpec, ProblemFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub certified: bool,
    pub spairs_checked: usize,
    pub all_reduced_to_zero: bool,
    pub monic: bool,
    pub tails_in_quotient_basis: bool,
    pub minimal_leading_monomials: bool,
    pub quotient_basis_consistent: bool,
    pub vanishing_checked: usize,
    pub vanishing_all_zero: bool,
    pub oracle_match: Option<bool>,
}

impl From<&Certificate> for CertificateRecord {
    fn from(c: &Certificate) -> Self {
        Self {
            certified: c.is_certified(),
            spairs_checked: c.spairs_checked,
            all_reduced_to_zero: c.all_reduced_to_zero,
            monic: c.monic,
            tails_in_quotient_basis: c.tails_in_quotient_basis,
            minimal_leading_monomials: c.minimal_leading_monomials,
            quotient_basis_consistent: c.quotient_basis_consistent,
            vanishing_checked: c.vanishing_checked,
            vanishing_all_zero: c.vanishing_all_zero,
            oracle_match: c.oracle_match,
        }
    }
}

/// JSON form of a computed basis. The originating problem is embedded so
/// that `verify` can re-check vanishing without the input file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub variables: Vec<String>,
    pub ordering: OrderingSpec,
    pub problem: ProblemFile,
    pub quotient_basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub basis: Vec<String>,
    pub certificate: Option<CertificateRecord>,
}

impl ResultFile {
    pub fn new(problem: &ProblemFile, result: &GroebnerResult) -> Self {
        let ord = &result.ordering;
        let vars = &problem.variables;
        let mono = |e: &ExponentVector| e.to_text(vars);
        Self {
            variables: vars.clone(),
            ordering: OrderingSpec {
                kind: ord.kind().name().to_string(),
                variable_priority: Some(ord.priority().iter().map(|&i| vars[i].clone()).collect()),
            },
            problem: problem.clone(),
            quotient_basis: result.quotient_basis.sorted(ord).iter().map(mono).collect(),
            leading_monomials: result.leading_monomials.sorted(ord).iter().map(mono).collect(),
            basis: result.basis.iter().map(|g| g.to_text(ord, vars)).collect(),
            certificate: result.certificate.as_ref().map(CertificateRecord::from),
        }
    }

    /// Rebuilds the in-memory result from its printed form.
    pub fn to_result(&self) -> Result<GroebnerResult, CliError> {
        let header = ProblemFile {
            variables: self.variables.clone(),
            ordering: self.ordering.clone(),
            conditions: Vec::new(),
        };
        let ordering = header.ordering()?;
        let vars = &self.variables;
        let poly = |field: &str, i: usize, s: &str| -> Result<Polynomial, CliError> {
            parse_polynomial(s, vars).map_err(|e| CliError::Parse(format!("{field}[{i}]: {e}")))
        };
        let mono = |field: &str, i: usize, s: &str| -> Result<ExponentVector, CliError> {
            let p = poly(field, i, s)?;
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((e, c)), None) if c.is_one() => Ok(e.clone()),
                _ => Err(CliError::Parse(format!("{field}[{i}]: {s:?} is not a monomial"))),
            }
        };
        let qb = self
            .quotient_basis
            .iter()
            .enumerate()
            .map(|(i, s)| mono("quotient_basis", i, s))
            .collect::<Result<_, _>>()?;
        let lms = self
            .leading_monomials
            .iter()
            .enumerate()
            .map(|(i, s)| mono("leading_monomials", i, s))
            .collect::<Result<_, _>>()?;
        let basis = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, s)| poly("basis", i, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroebnerResult {
            ordering,
            quotient_basis: LowerSet::new(qb).map_err(|e| CliError::Invalid(format!("quotient_basis: {e}")))?,
            leading_monomials: StaircaseCorners::new(lms)
                .map_err(|e| CliError::Invalid(format!("leading_monomials: {e}")))?,
            basis,
            certificate: None,
        })
    }
}

fn describe_ordering(ord: &MonomialOrdering, vars: &[String]) -> String {
    let names: Vec<&str> = ord.priority().iter().map(|&i| vars[i].as_str()).collect();
    format!("{}({})", ord.kind().name(), names.iter().rev().cloned().collect::<Vec<_>>().join(" < "))
}

pub fn certificate_summary(c: &Certificate) -> String {
    let mut s = String::new();
    let verdict = if c.is_certified() { "certified" } else { "NOT certified" };
    let _ = write!(
        s,
        "{verdict}: {} S-pairs checked (all reduce to zero: {}), monic: {}, tails in quotient basis: {}, \
         minimal leading monomials: {}, {} functional applications (all zero: {})",
        c.spairs_checked,
        c.all_reduced_to_zero,
        c.monic,
        c.tails_in_quotient_basis,
        c.minimal_leading_monomials,
        c.vanishing_checked,
        c.vanishing_all_zero,
    );
    if let Some(m) = c.oracle_match {
        let _ = write!(s, ", Buchberger-Moller match: {m}");
    }
    s
}

pub fn render_text(problem: &ProblemFile, result: &GroebnerResult) -> String {
    let vars = &problem.variables;
    let ord = &result.ordering;
    let file = ResultFile::new(problem, result);
    let mut out = String::new();
    let _ = writeln!(out, "ordering: {}", describe_ordering(ord, vars));
    let _ = writeln!(out, "functionals: {}", result.quotient_basis.len());
    let _ = writeln!(out, "quotient basis: {{{}}}", file.quotient_basis.join(", "));
    let _ = writeln!(out, "leading monomials: {{{}}}", file.leading_monomials.join(", "));
    let _ = writeln!(out, "reduced Groebner basis:");
    for g in &file.basis {
        let _ = writeln!(out, "  {g}");
    }
    match &result.certificate {
        Some(c) => {
            let _ = writeln!(out, "certificate: {}", certificate_summary(c));
        }
        None => {
            let _ = writeln!(out, "certificate: not checked");
        }
    }
    out
}
