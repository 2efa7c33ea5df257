//! Reduced Gröbner bases for the vanishing ideals of ideal-interpolation
//! conditions.
//!
//! Conditions are point evaluations, optionally composed with differential
//! operators `P(D)` drawn from a D-invariant space. Every condition is
//! shifted to the origin through the truncated exponential `e^{θX}`, the
//! resulting polynomials are brought into "reverse" complete reduced form by
//! least-monomial elimination, and the reduced Gröbner basis is read off
//! directly from the eliminated coefficients.
//!
//! All arithmetic is exact over the rationals.
//!
//! ```
//! use idealgb::{groebner_lagrange, MonomialOrdering, OrderKind, Point};
//!
//! let ord = MonomialOrdering::new(OrderKind::Grlex, vec![0, 1]).unwrap();
//! let points = vec![
//!     Point::from_ints(&[0, 0]),
//!     Point::from_ints(&[1, 2]),
//!     Point::from_ints(&[2, 1]),
//! ];
//! let result = groebner_lagrange(&points, &ord).unwrap();
//! let vars = ["x", "y"];
//! let printed: Vec<String> = result.basis.iter().map(|g| g.to_text(&ord, &vars)).collect();
//! assert_eq!(printed, ["y^2 + 2/3*x - 7/3*y", "x*y - 2/3*x - 2/3*y", "x^2 - 7/3*x + 2/3*y"]);
//! ```

pub mod error;
pub mod functional;
pub mod gbuilder;
pub mod linalg;
pub mod oracle;
pub mod polyring;
pub mod rcrb;
pub mod staircase;
pub mod stats;
pub mod workload;

pub use error::{Error, Result};
pub use functional::{
    apply_functional, shift_conditions, truncated_exponential, validate_d_invariance,
    ConditionSpace, InterpolationProblem, Point,
};
pub use gbuilder::{
    groebner_hermite, groebner_hermite_with, groebner_lagrange, interpolate, GroebnerResult,
    HermiteOptions,
};
pub use oracle::{bm_vanishing_ideal, divide, is_reduced_groebner, Certificate, Division};
pub use polyring::{
    parse_polynomial, support_union, ExponentVector, MonomialOrdering, OrderKind, ParseError,
    Polynomial, Rational,
};
pub use rcrb::{is_complete_reduced, is_reverse_reduced, reverse_reduce, ReverseReducedBasis};
pub use staircase::{compare_sets, corners, is_minimal_basis, quotient_basis, LowerSet, SetOrder, StaircaseCorners};
pub use stats::OpCount;
