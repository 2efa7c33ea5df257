//! JSON problem files.
//!
//! ```json
//! {
//!   "variables": ["x", "y"],
//!   "ordering": { "kind": "grlex", "variable_priority": ["x", "y"] },
//!   "conditions": [
//!     { "point": [0, 0], "functionals": ["1", "x", "1/2*x^2 + y"] },
//!     { "point": ["1", "2"], "functionals": ["1", "x"] }
//!   ]
//! }
//! ```
//!
//! `functionals` defaults to `["1"]` (plain evaluation) and
//! `variable_priority` defaults to the declaration order.

use std::collections::HashSet;

use idealgb::polyring::parse_rational;
use idealgb::{parse_polynomial, ConditionSpace, InterpolationProblem, MonomialOrdering, OrderKind, Point};
use serde::{Deserialize, Serialize};

use crate::commands::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub ordering: OrderingSpec,
    pub conditions: Vec<ConditionSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderingSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variable_priority: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionSpec {
    pub point: Vec<Coordinate>,
    #[serde(default = "default_functionals")]
    pub functionals: Vec<String>,
}

fn default_functionals() -> Vec<String> {
    vec!["1".to_string()]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Text(String),
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Parse(format!("{} (line {}, column {})", e, e.line(), e.column()))
        })
    }

    pub fn ordering(&self) -> Result<MonomialOrdering, CliError> {
        let kind: OrderKind = self
            .ordering
            .kind
            .parse()
            .map_err(|_| CliError::Parse(format!("ordering.kind: unknown ordering {:?}", self.ordering.kind)))?;
        let priority = match &self.ordering.variable_priority {
            None => (0..self.variables.len()).collect(),
            Some(names) => names
                .iter()
                .map(|n| {
                    self.variables
                        .iter()
                        .position(|v| v == n)
                        .ok_or_else(|| CliError::Parse(format!("ordering.variable_priority: unknown variable {n:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        MonomialOrdering::new(kind, priority)
            .map_err(|e| CliError::Parse(format!("ordering.variable_priority: {e}")))
    }

    /// Parses every field into a validated problem.
    ///
    /// Syntax problems map to [`CliError::Parse`]; semantically invalid
    /// problems (no conditions, repeated points) to [`CliError::Invalid`].
    pub fn to_problem(&self) -> Result<InterpolationProblem, CliError> {
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !is_identifier(v) {
                return Err(CliError::Parse(format!("variables: {v:?} is not an identifier")));
            }
            if !seen.insert(v) {
                return Err(CliError::Parse(format!("variables: duplicate variable {v:?}")));
            }
        }
        if self.variables.is_empty() {
            return Err(CliError::Parse("variables: at least one variable is required".into()));
        }
        let ordering = self.ordering()?;
        let d = self.variables.len();
        let mut conditions = Vec::with_capacity(self.conditions.len());
        for (i, cond) in self.conditions.iter().enumerate() {
            if cond.point.len() != d {
                return Err(CliError::Parse(format!(
                    "conditions[{i}].point: expected {d} coordinates, found {}",
                    cond.point.len()
                )));
            }
            let coords = cond
                .point
                .iter()
                .enumerate()
                .map(|(j, c)| match c {
                    Coordinate::Int(n) => Ok(idealgb::Rational::from_integer((*n).into())),
                    Coordinate::Text(s) => {
                        parse_rational(s).map_err(|e| CliError::Parse(format!("conditions[{i}].point[{j}]: {e}")))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let generators = cond
                .functionals
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_polynomial(s, &self.variables)
                        .map_err(|e| CliError::Parse(format!("conditions[{i}].functionals[{j}]: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            conditions.push(ConditionSpace::new(Point::new(coords), generators));
        }
        InterpolationProblem::new(ordering, conditions).map_err(CliError::from_core)
    }
}
