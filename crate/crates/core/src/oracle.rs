//! Independent verification of pipeline output.
//!
//! Everything here relies on `polyring` alone: multivariate division,
//! S-polynomial certification, direct evaluation of functionals by
//! differentiation and substitution, and a Buchberger–Möller computation of
//! the vanishing ideal of a point set.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functional::{InterpolationProblem, Point};
use crate::gbuilder::GroebnerResult;
use crate::polyring::{ExponentVector, MonomialOrdering, Polynomial, Rational};
use crate::staircase::{LowerSet, StaircaseCorners};
use crate::stats::OpCount;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Multivariate division of `f` by `divisors`; the first divisor whose
/// leading monomial divides the current leading term is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrdering) -> Division {
    let d = f.nvars();
    let leads: Vec<(ExponentVector, Rational)> = divisors
        .iter()
        .map(|g| {
            let lm = g.leading_monomial(ord).expect("divisors are nonzero").clone();
            let lc = g.coeff(&lm);
            (lm, lc)
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(d); divisors.len()];
    let mut remainder = Polynomial::zero(d);
    let mut p = f.clone();
    let mut ops = OpCount::default();
    while let Ok(lm) = p.leading_monomial(ord) {
        let lm = lm.clone();
        let lc = p.coeff(&lm);
        match leads.iter().position(|(g_lm, _)| g_lm.divides(&lm)) {
            Some(i) => {
                let (g_lm, g_lc) = &leads[i];
                let shift = lm.checked_div(g_lm).expect("divisible");
                let c = &lc / g_lc;
                quotients[i].add_term(shift.clone(), c.clone());
                let term = divisors[i].mul_term(&shift, &Rational::one());
                p.sub_scaled(&c, &term, &mut ops);
            }
            None => {
                remainder.add_term(lm.clone(), lc.clone());
                p.add_term(lm, -lc);
            }
        }
    }
    Division { quotients, remainder }
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrdering) -> Polynomial {
    let (fm, gm) = (f.leading_monomial(ord).expect("nonzero"), g.leading_monomial(ord).expect("nonzero"));
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.checked_div(fm).expect("lcm"), &f.coeff(fm).recip());
    let b = g.mul_term(&l.checked_div(gm).expect("lcm"), &g.coeff(gm).recip());
    &a - &b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub spairs_checked: usize,
    pub all_reduced_to_zero: bool,
    pub monic: bool,
    pub tails_in_quotient_basis: bool,
    pub minimal_leading_monomials: bool,
    /// The quotient basis is exactly the set of monomials outside the
    /// leading-monomial ideal.
    pub quotient_basis_consistent: bool,
    pub vanishing_checked: usize,
    pub vanishing_all_zero: bool,
    /// Set when a Buchberger–Möller comparison ran.
    pub oracle_match: Option<bool>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.all_reduced_to_zero
            && self.monic
            && self.tails_in_quotient_basis
            && self.minimal_leading_monomials
            && self.quotient_basis_consistent
            && self.vanishing_all_zero
            && self.oracle_match != Some(false)
    }
}

/// Checks the structural claims of a reduced Gröbner basis. Vanishing and
/// oracle fields are left vacuous; see [`certify`].
pub fn is_reduced_groebner(result: &GroebnerResult) -> Certificate {
    let ord = &result.ordering;
    let basis = &result.basis;
    let qb = result.quotient_basis.monomials();

    let leads: Option<Vec<ExponentVector>> =
        basis.iter().map(|g| g.leading_monomial(ord).ok().cloned()).collect();
    let Some(leads) = leads else {
        return Certificate {
            spairs_checked: 0,
            all_reduced_to_zero: false,
            monic: false,
            tails_in_quotient_basis: false,
            minimal_leading_monomials: false,
            quotient_basis_consistent: false,
            vanishing_checked: 0,
            vanishing_all_zero: true,
            oracle_match: None,
        };
    };

    let monic = basis.iter().zip(&leads).all(|(g, lm)| g.coeff(lm).is_one());
    let tails_in_quotient_basis = basis
        .iter()
        .zip(&leads)
        .all(|(g, lm)| g.support().all(|e| e == lm || qb.contains(e)));
    let lead_set: BTreeSet<_> = leads.iter().cloned().collect();
    let minimal_leading_monomials = lead_set.len() == leads.len()
        && leads
            .iter()
            .enumerate()
            .all(|(i, a)| leads.iter().enumerate().all(|(j, b)| i == j || !b.divides(a)))
        && &lead_set == result.leading_monomials.monomials();
    let covered = |m: &ExponentVector| leads.iter().any(|l| l.divides(m));
    let quotient_basis_consistent = qb.iter().all(|b| {
        !covered(b) && (0..b.nvars()).all(|j| {
            let up = b.incremented(j);
            qb.contains(&up) || covered(&up)
        })
    }) && qb.contains(&ExponentVector::zero(ord.nvars())) == !covered(&ExponentVector::zero(ord.nvars()));

    let mut spairs_checked = 0;
    let mut all_reduced_to_zero = true;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].is_coprime(&leads[j]) {
                continue;
            }
            spairs_checked += 1;
            let s = s_polynomial(&basis[i], &basis[j], ord);
            if !divide(&s, basis, ord).remainder.is_zero() {
                all_reduced_to_zero = false;
            }
        }
    }

    Certificate {
        spairs_checked,
        all_reduced_to_zero,
        monic,
        tails_in_quotient_basis,
        minimal_leading_monomials,
        quotient_basis_consistent,
        vanishing_checked: 0,
        vanishing_all_zero: true,
        oracle_match: None,
    }
}

/// `(P(D) g)(θ)` by differentiating `g` and substituting `θ`.
pub fn evaluate_functional(point: &Point, generator: &Polynomial, g: &Polynomial) -> Rational {
    let mut total = Rational::zero();
    for (alpha, c) in generator.terms() {
        let dg = g.differentiate(alpha);
        total += c * dg.evaluate(point.coords()).expect("matching dimension");
    }
    total
}

/// Counts the (functional, basis element) pairs and whether all vanish.
pub fn check_vanishing(basis: &[Polynomial], problem: &InterpolationProblem) -> (usize, bool) {
    let mut checked = 0;
    let mut all_zero = true;
    for space in problem.conditions() {
        for generator in &space.generators {
            for g in basis {
                checked += 1;
                if !evaluate_functional(&space.point, generator, g).is_zero() {
                    all_zero = false;
                }
            }
        }
    }
    (checked, all_zero)
}

/// Full certificate: structure, vanishing on every functional, and (when
/// `compare_with_bm` is set and the problem is pure Lagrange) agreement with
/// [`bm_vanishing_ideal`].
pub fn certify(result: &GroebnerResult, problem: &InterpolationProblem, compare_with_bm: bool) -> Certificate {
    let mut cert = is_reduced_groebner(result);
    let (checked, all_zero) = check_vanishing(&result.basis, problem);
    cert.vanishing_checked = checked;
    cert.vanishing_all_zero = all_zero && result.quotient_basis.len() == problem.functional_count();
    if compare_with_bm && problem.is_lagrange() {
        let points: Vec<Point> = problem.conditions().iter().map(|c| c.point.clone()).collect();
        cert.oracle_match = Some(match bm_vanishing_ideal(&points, &result.ordering) {
            Ok(bm) => bm.same_basis(result),
            Err(_) => false,
        });
    }
    cert
}

pub fn bm_vanishing_ideal(points: &[Point], ord: &MonomialOrdering) -> Result<GroebnerResult> {
    bm_vanishing_ideal_counted(points, ord, &mut OpCount::default())
}

struct EchelonRow {
    pivot: usize,
    values: Vec<Rational>,
    /// Coefficients over the standard monomials found so far.
    combo: Vec<Rational>,
}

/// Buchberger–Möller: visit monomials in increasing `≺` order, reduce each
/// evaluation vector against the standard monomials seen so far, and emit a
/// basis element whenever it reduces to zero.
pub fn bm_vanishing_ideal_counted(
    points: &[Point],
    ord: &MonomialOrdering,
    ops: &mut OpCount,
) -> Result<GroebnerResult> {
    let d = ord.nvars();
    if points.is_empty() {
        return Err(Error::NoConditions);
    }
    for (i, p) in points.iter().enumerate() {
        if p.nvars() != d {
            return Err(Error::DimensionMismatch { expected: d, found: p.nvars() });
        }
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoints { point: p.to_string() });
        }
    }

    let mut standard: Vec<ExponentVector> = Vec::new();
    let mut rows: Vec<EchelonRow> = Vec::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut leads: Vec<ExponentVector> = Vec::new();
    let mut candidates: BTreeSet<ExponentVector> = BTreeSet::from([ExponentVector::zero(d)]);

    loop {
        candidates.retain(|c| !leads.iter().any(|l| l.divides(c)));
        let Some(t) = ord.min(candidates.iter()).cloned() else { break };
        candidates.remove(&t);

        let mut values: Vec<Rational> = points
            .iter()
            .map(|p| {
                let mut v = Rational::one();
                for (x, &k) in p.coords().iter().zip(t.exponents()) {
                    for _ in 0..k {
                        v *= x;
                        ops.mul += 1;
                    }
                }
                v
            })
            .collect();
        let mut combo = vec![Rational::zero(); standard.len()];
        for row in &rows {
            if values[row.pivot].is_zero() {
                continue;
            }
            let f = &values[row.pivot] / &row.values[row.pivot];
            ops.div += 1;
            for (v, r) in values.iter_mut().zip(&row.values) {
                if !r.is_zero() {
                    *v -= &f * r;
                    ops.mul += 1;
                    ops.add += 1;
                }
            }
            for (c, r) in combo.iter_mut().zip(&row.combo) {
                if !r.is_zero() {
                    *c -= &f * r;
                    ops.mul += 1;
                    ops.add += 1;
                }
            }
        }

        match values.iter().position(|v| !v.is_zero()) {
            None => {
                let mut g = Polynomial::monomial(t.clone(), Rational::one());
                for (s, c) in standard.iter().zip(combo) {
                    g.add_term(s.clone(), c);
                }
                basis.push(g);
                leads.push(t);
            }
            Some(pivot) => {
                combo.push(Rational::one());
                rows.push(EchelonRow { pivot, values, combo });
                for j in 0..d {
                    candidates.insert(t.incremented(j));
                }
                standard.push(t);
            }
        }
    }

    basis.sort_by(|a, b| {
        ord.compare(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
    });
    Ok(GroebnerResult {
        ordering: ord.clone(),
        quotient_basis: LowerSet::new(standard.into_iter().collect())?,
        leading_monomials: StaircaseCorners::new(leads.into_iter().collect())?,
        basis,
        certificate: None,
    })
}
