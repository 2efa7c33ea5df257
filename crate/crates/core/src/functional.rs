//! Condition functionals `δ_θ ∘ P(D)` and their conversion to the origin.
//!
//! A functional at `θ` is rewritten as `δ_0 ∘ e^{θD} P(D)`; on polynomials of
//! total degree at most `n` only the truncation `λ_n(e^{θX} P)` matters, so
//! each condition becomes a single polynomial whose pairing with `f` through
//! [`apply_functional`] reproduces the original condition.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{support_union, MonomialOrdering, Polynomial, Rational};

/// An interpolation point `θ ∈ ℚ^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn origin(nvars: usize) -> Self {
        Self(vec![Rational::zero(); nvars])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The linear form `θX = Σ θ_i x_i`.
    pub fn linear_form(&self) -> Polynomial {
        let d = self.nvars();
        let mut p = Polynomial::zero(d);
        for (i, c) in self.0.iter().enumerate() {
            p.add_term(crate::ExponentVector::unit(d, i), c.clone());
        }
        p
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The conditions `δ_θ ∘ {P_1(D), …, P_s(D)}` attached to one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionSpace {
    pub point: Point,
    pub generators: Vec<Polynomial>,
}

impl ConditionSpace {
    pub fn new(point: Point, generators: Vec<Polynomial>) -> Self {
        Self { point, generators }
    }

    /// Plain evaluation at `point`.
    pub fn lagrange(point: Point) -> Self {
        let d = point.nvars();
        Self { point, generators: vec![Polynomial::one(d)] }
    }
}

/// A validated ideal-interpolation problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationProblem {
    nvars: usize,
    ordering: MonomialOrdering,
    conditions: Vec<ConditionSpace>,
}

impl InterpolationProblem {
    /// Checks dimensions, point distinctness, and that at least one
    /// condition is present. D-invariance is checked separately by
    /// [`validate_d_invariance`].
    pub fn new(ordering: MonomialOrdering, conditions: Vec<ConditionSpace>) -> Result<Self> {
        let nvars = ordering.nvars();
        if conditions.is_empty() {
            return Err(Error::NoConditions);
        }
        let mut seen = HashSet::new();
        for (i, space) in conditions.iter().enumerate() {
            if space.point.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: space.point.nvars() });
            }
            if space.generators.is_empty() {
                return Err(Error::EmptyConditionSpace { point_index: i });
            }
            if let Some(g) = space.generators.iter().find(|g| g.nvars() != nvars) {
                return Err(Error::DimensionMismatch { expected: nvars, found: g.nvars() });
            }
            if !seen.insert(&space.point) {
                return Err(Error::DuplicatePoints { point: space.point.to_string() });
            }
        }
        Ok(Self { nvars, ordering, conditions })
    }

    pub fn lagrange(points: &[Point], ordering: MonomialOrdering) -> Result<Self> {
        Self::new(ordering, points.iter().cloned().map(ConditionSpace::lagrange).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.ordering
    }

    pub fn conditions(&self) -> &[ConditionSpace] {
        &self.conditions
    }

    /// `n = s_1 + … + s_k`, the number of functionals.
    pub fn functional_count(&self) -> usize {
        self.conditions.iter().map(|c| c.generators.len()).sum()
    }

    pub fn is_lagrange(&self) -> bool {
        self.conditions.iter().all(|c| {
            c.generators.len() == 1 && {
                let g = &c.generators[0];
                g.num_terms() == 1 && g.support().all(|e| e.is_constant())
            }
        })
    }
}

/// `δ_0 ∘ P(D) f = Σ_α α! P̂(α) f̂(α)`.
pub fn apply_functional(p: &Polynomial, f: &Polynomial) -> Rational {
    debug_assert_eq!(p.nvars(), f.nvars());
    let (small, large) = if p.num_terms() <= f.num_terms() { (p, f) } else { (f, p) };
    let mut total = Rational::zero();
    for (e, c) in small.terms() {
        if let Some(other) = large.coeff_ref(e) {
            total += c * other * Rational::from_integer(e.factorial());
        }
    }
    total
}

/// `λ_n(e^{θX}) = Σ_{j=0}^{n} (θX)^j / j!`.
pub fn truncated_exponential(theta: &Point, n: u32) -> Polynomial {
    let d = theta.nvars();
    let linear = theta.linear_form();
    let mut sum = Polynomial::one(d);
    if linear.is_zero() {
        return sum;
    }
    let mut power = Polynomial::one(d);
    for j in 1..=n {
        power = &power * &linear;
        let inv = Rational::new(BigInt::one(), BigInt::from(j));
        power = power.scale(&inv);
        sum = &sum + &power;
    }
    sum
}

/// `λ_n(e^{θ_i X} P_ij)` for every condition, flattened in input order, with
/// `n` the total functional count.
pub fn shift_conditions(problem: &InterpolationProblem) -> Vec<Polynomial> {
    let n = problem.functional_count() as u32;
    let mut out = Vec::with_capacity(n as usize);
    for space in problem.conditions() {
        if space.point.is_origin() {
            out.extend(space.generators.iter().map(|g| g.truncate(n)));
            continue;
        }
        let exp = truncated_exponential(&space.point, n);
        for g in &space.generators {
            out.push(product_truncated(&exp, g, n));
        }
    }
    out
}

/// `λ_n(a * b)` without forming the high-degree terms.
fn product_truncated(a: &Polynomial, b: &Polynomial, n: u32) -> Polynomial {
    let mut out = Polynomial::zero(a.nvars());
    for (eb, cb) in b.terms() {
        let db = eb.degree();
        if db > n {
            continue;
        }
        for (ea, ca) in a.terms() {
            if ea.degree() + db <= n {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
    }
    out
}

/// Checks that the span of `space.generators` is closed under every `∂/∂x_j`.
///
/// On failure the error names the first (generator, variable) pair whose
/// derivative escapes the span; `point_index` is left at 0 for the caller to
/// fill in.
pub fn validate_d_invariance(space: &ConditionSpace) -> Result<()> {
    let gens = &space.generators;
    let Some(first) = gens.first() else {
        return Ok(());
    };
    let d = first.nvars();
    let mut derivs = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for var in 0..d {
            derivs.push((gi, var, g.derivative(var)));
        }
    }
    let columns: Vec<_> = support_union(gens.iter().chain(derivs.iter().map(|(_, _, p)| p)))
        .into_iter()
        .collect();
    let row = |p: &Polynomial| -> Vec<Rational> { columns.iter().map(|e| p.coeff(e)).collect() };
    let base: Vec<Vec<Rational>> = gens.iter().map(row).collect();
    let base_rank = linalg::rank(&base);
    for (gi, var, dp) in &derivs {
        if dp.is_zero() {
            continue;
        }
        let mut extended = base.clone();
        extended.push(row(dp));
        if linalg::rank(&extended) > base_rank {
            return Err(Error::DInvarianceViolation { point_index: 0, generator: *gi, variable: *var });
        }
    }
    Ok(())
}
