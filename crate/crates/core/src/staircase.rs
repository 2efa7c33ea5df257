//! Quotient-ring monomial bases (lower sets) and their corners.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{support_union, ExponentVector, MonomialOrdering, Polynomial, Rational};
use crate::rcrb::ReverseReducedBasis;

/// A downward-closed set of exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerSet {
    monomials: BTreeSet<ExponentVector>,
}

impl LowerSet {
    pub fn new(monomials: BTreeSet<ExponentVector>) -> Result<Self> {
        for m in &monomials {
            for var in 0..m.nvars() {
                if let Some(below) = m.decremented(var) {
                    if !monomials.contains(&below) {
                        return Err(Error::MalformedConditions { monomial: m.to_string() });
                    }
                }
            }
        }
        Ok(Self { monomials })
    }

    pub fn monomials(&self) -> &BTreeSet<ExponentVector> {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.monomials.contains(m)
    }

    /// Members ascending under `ord`.
    pub fn sorted(&self, ord: &MonomialOrdering) -> Vec<ExponentVector> {
        let mut v: Vec<_> = self.monomials.iter().cloned().collect();
        ord.sort(&mut v);
        v
    }
}

/// Divisibility-minimal monomials outside a lower set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseCorners {
    monomials: BTreeSet<ExponentVector>,
}

impl StaircaseCorners {
    /// Wraps a set of pairwise indivisible monomials.
    pub fn new(monomials: BTreeSet<ExponentVector>) -> Result<Self> {
        for a in &monomials {
            if let Some(b) = monomials.iter().find(|b| *b != a && b.divides(a)) {
                return Err(Error::MalformedConditions { monomial: format!("{a} (divisible by {b})") });
            }
        }
        Ok(Self { monomials })
    }

    pub fn monomials(&self) -> &BTreeSet<ExponentVector> {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn sorted(&self, ord: &MonomialOrdering) -> Vec<ExponentVector> {
        let mut v: Vec<_> = self.monomials.iter().cloned().collect();
        ord.sort(&mut v);
        v
    }

    /// Whether some corner divides `m`, i.e. `m` lies outside the lower set.
    pub fn covers(&self, m: &ExponentVector) -> bool {
        self.monomials.iter().any(|c| c.divides(m))
    }
}

/// `QB = {lm(P_1), …, lm(P_n)}`.
pub fn quotient_basis(basis: &ReverseReducedBasis) -> Result<LowerSet> {
    LowerSet::new(basis.least_monomials.iter().cloned().collect())
}

/// Leading monomials of the reduced Gröbner basis: the divisibility-minimal
/// elements of the border `{β + ε_j : β ∈ QB} \ QB`.
pub fn corners(qb: &LowerSet) -> StaircaseCorners {
    let mut border = BTreeSet::new();
    for b in &qb.monomials {
        for var in 0..b.nvars() {
            let candidate = b.incremented(var);
            if !qb.contains(&candidate) {
                border.insert(candidate);
            }
        }
    }
    let monomials = border
        .iter()
        .filter(|c| !border.iter().any(|o| o != *c && o.divides(c)))
        .cloned()
        .collect();
    StaircaseCorners { monomials }
}

/// Outcome of comparing two monomial sets by their symmetric difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOrder {
    Less,
    Greater,
    Equal,
}

/// `T1 ≺ T2` iff `max(T1 − T2) ≺ max(T2 − T1)`.
///
/// One-sided differences (one set a proper subset of the other) are decided
/// by which side has the extra element.
pub fn compare_sets(
    ord: &MonomialOrdering,
    t1: &BTreeSet<ExponentVector>,
    t2: &BTreeSet<ExponentVector>,
) -> SetOrder {
    let only1 = ord.max(t1.difference(t2));
    let only2 = ord.max(t2.difference(t1));
    match (only1, only2) {
        (None, None) => SetOrder::Equal,
        (None, Some(_)) => SetOrder::Less,
        (Some(_), None) => SetOrder::Greater,
        (Some(a), Some(b)) => match ord.compare(a, b) {
            Ordering::Less => SetOrder::Less,
            Ordering::Greater => SetOrder::Greater,
            Ordering::Equal => unreachable!("set differences are disjoint"),
        },
    }
}

/// `T_Δ = (δ_0 ∘ P_i(D) X^{β_j})_{ij}`.
pub fn condition_matrix(conditions: &[Polynomial], monomials: &[ExponentVector]) -> Vec<Vec<Rational>> {
    let facts: Vec<Rational> = monomials.iter().map(|b| Rational::from_integer(b.factorial())).collect();
    conditions
        .iter()
        .map(|p| {
            monomials
                .iter()
                .zip(&facts)
                .map(|(b, f)| p.coeff_ref(b).map_or_else(Rational::zero, |c| c * f))
                .collect()
        })
        .collect()
}

/// Whether `qb` is the `≺`-minimal interpolation monomial basis for the
/// origin conditions `δ_0 ∘ P_i(D)`.
///
/// Monomials outside `Λ{P_i}` give zero columns and never help, so the
/// candidates are that union support. Walking the candidates from the top,
/// any `T' ≺ qb` agrees with `qb` above some `t ∈ qb`, omits `t`, and is free
/// below `t`; such a `T'` exists iff the columns of `qb ∩ {≻ t}` together with
/// all candidates `≺ t` reach full rank. Each branch point is decided exactly.
pub fn is_minimal_basis(ord: &MonomialOrdering, qb: &LowerSet, conditions: &[Polynomial]) -> bool {
    let n = conditions.len();
    if qb.len() != n {
        return false;
    }
    let members = qb.sorted(ord);
    if !linalg::is_nonsingular(&condition_matrix(conditions, &members)) {
        return false;
    }
    let mut candidates: Vec<_> = support_union(conditions).into_iter().collect();
    ord.sort(&mut candidates);
    for t in &members {
        let mut cols: Vec<ExponentVector> = members
            .iter()
            .filter(|m| ord.compare(m, t) == Ordering::Greater)
            .cloned()
            .collect();
        cols.extend(candidates.iter().filter(|c| ord.compare(c, t) == Ordering::Less).cloned());
        if cols.len() < n {
            continue;
        }
        let m = condition_matrix(conditions, &cols);
        if linalg::rank(&m) == n {
            return false;
        }
    }
    true
}
