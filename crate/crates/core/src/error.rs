use thiserror::Error;

use crate::polyring::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    /// Elimination step `step` (1-based) found its working polynomial reduced
    /// to zero, so the inputs were linearly dependent.
    #[error("linearly dependent conditions: condition #{step} reduced to zero")]
    LinearDependence { step: usize },

    #[error("duplicate interpolation point {point}")]
    DuplicatePoints { point: String },

    /// The derivative of generator `generator` (0-based, within `point_index`)
    /// with respect to variable `variable` leaves the span of the generators.
    #[error(
        "condition space at point #{point_index} is not D-invariant: \
         d/dx{variable} of generator #{generator} escapes the span"
    )]
    DInvarianceViolation {
        point_index: usize,
        generator: usize,
        variable: usize,
    },

    #[error("least monomials do not form a lower set: {monomial} is missing a divisor")]
    MalformedConditions { monomial: String },

    #[error("no conditions")]
    NoConditions,

    #[error("condition space at point #{point_index} has no generators")]
    EmptyConditionSpace { point_index: usize },

    #[error("invalid monomial ordering: {0}")]
    InvalidOrdering(String),

    #[error("expected {expected} values, found {found}")]
    ValueCount { expected: usize, found: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
