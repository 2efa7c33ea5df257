//! Exact multivariate polynomials over the rationals, monomial orderings, and
//! the polynomial text format.

mod exponent;
mod ordering;
mod polynomial;
mod text;

pub use exponent::ExponentVector;
pub use ordering::{MonomialOrdering, OrderKind};
pub use polynomial::{support_union, Polynomial};
pub use text::{parse_polynomial, parse_rational, ParseError};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;
