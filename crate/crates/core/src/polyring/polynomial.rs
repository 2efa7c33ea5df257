use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::stats::OpCount;

use super::{ExponentVector, MonomialOrdering, Rational};

/// A multivariate polynomial `Σ P̂(α) X^α` with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored, so
/// the zero polynomial is the empty map. Storage order does not depend on any
/// monomial ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn monomial(exp: ExponentVector, c: Rational) -> Self {
        let nvars = exp.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { nvars, terms }
    }

    /// The variable `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, var), Rational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.nvars() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    /// The support `Λ{P}`.
    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn contains(&self, exp: &ExponentVector) -> bool {
        self.terms.contains_key(exp)
    }

    pub fn coeff_ref(&self, exp: &ExponentVector) -> Option<&Rational> {
        self.terms.get(exp)
    }

    /// `P̂(α)`, zero when `α` is outside the support.
    pub fn coeff(&self, exp: &ExponentVector) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn add_term(&mut self, exp: ExponentVector, c: Rational) {
        debug_assert_eq!(exp.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// `c * X^exp * self`.
    pub fn mul_term(&self, exp: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.mul(exp), v * c)).collect(),
        }
    }

    /// In-place `self -= factor * other`, tallying the rational work done.
    pub fn sub_scaled(&mut self, factor: &Rational, other: &Self, ops: &mut OpCount) {
        debug_assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            let delta = factor * c;
            ops.mul += 1;
            match self.terms.entry(e.clone()) {
                Entry::Vacant(v) => {
                    v.insert(-delta);
                }
                Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    ops.add += 1;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }

    /// `LM(P)`: the `≺`-largest monomial of the support.
    pub fn leading_monomial(&self, ord: &MonomialOrdering) -> Result<&ExponentVector> {
        ord.max(self.terms.keys()).ok_or(Error::ZeroPolynomial)
    }

    /// `lm(P)`: the `≺`-smallest monomial of the support.
    pub fn least_monomial(&self, ord: &MonomialOrdering) -> Result<&ExponentVector> {
        ord.min(self.terms.keys()).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self, ord: &MonomialOrdering) -> Result<&Rational> {
        let lm = self.leading_monomial(ord)?;
        Ok(&self.terms[lm])
    }

    /// Drops every term of total degree above `max_degree` (`λ_n`).
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `∂P/∂x_var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.exponents()[var];
            if k > 0 {
                let lowered = e.decremented(var).expect("positive exponent");
                out.add_term(lowered, c * Rational::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    /// `D^α P`.
    pub fn differentiate(&self, alpha: &ExponentVector) -> Self {
        let mut out = self.clone();
        for (var, &k) in alpha.exponents().iter().enumerate() {
            for _ in 0..k {
                out = out.derivative(var);
            }
        }
        out
    }

    /// `P(θ)` by direct substitution.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.exponents()) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Divides through by the leading coefficient.
    pub fn make_monic(&self, ord: &MonomialOrdering) -> Result<Self> {
        let lc = self.leading_coeff(ord)?.clone();
        Ok(self.scale(&lc.recip()))
    }
}

/// `Λ{P_1, …, P_n}`: every monomial occurring in any of the polynomials.
pub fn support_union<'a, I>(ps: I) -> BTreeSet<ExponentVector>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    ps.into_iter().flat_map(|p| p.support().cloned()).collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// Panics on a dimension mismatch; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial dimensions differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial dimensions differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial dimensions differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}
