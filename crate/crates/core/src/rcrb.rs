//! "Reverse" complete reduced bases.
//!
//! A linearly independent list `P_1, …, P_n` is reverse reduced when each
//! least monomial `lm(P_i)` occurs in no other `P_j`. [`reverse_reduce`]
//! reaches that form by sweeping `k = 1..n` and eliminating `lm(P_k)` from
//! every other polynomial.

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{support_union, ExponentVector, MonomialOrdering, Polynomial, Rational};
use crate::stats::OpCount;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseReducedBasis {
    /// `P_i^{(n)}`, unnormalized.
    pub polys: Vec<Polynomial>,
    /// `β_i` with `X^{β_i} = lm(P_i^{(n)})`, aligned with `polys`.
    pub least_monomials: Vec<ExponentVector>,
}

impl ReverseReducedBasis {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `(P_i, β_i, P̂_i(β_i))` for each member.
    pub fn pivots(&self) -> impl Iterator<Item = (&Polynomial, &ExponentVector, &Rational)> {
        self.polys.iter().zip(&self.least_monomials).map(|(p, b)| {
            let c = p.coeff_ref(b).expect("least monomial lies in the support");
            (p, b, c)
        })
    }
}

pub fn reverse_reduce(ps: &[Polynomial], ord: &MonomialOrdering) -> Result<ReverseReducedBasis> {
    reverse_reduce_counted(ps, ord, &mut OpCount::default())
}

/// [`reverse_reduce`] with an operation tally.
pub fn reverse_reduce_counted(
    ps: &[Polynomial],
    ord: &MonomialOrdering,
    ops: &mut OpCount,
) -> Result<ReverseReducedBasis> {
    let Some(first) = ps.first() else {
        return Err(Error::NoConditions);
    };
    let d = first.nvars();
    if let Some(bad) = ps.iter().find(|p| p.nvars() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: bad.nvars() });
    }

    let mut polys = ps.to_vec();
    let mut least = Vec::with_capacity(polys.len());
    for k in 0..polys.len() {
        let beta = polys[k]
            .least_monomial(ord)
            .map_err(|_| Error::LinearDependence { step: k + 1 })?
            .clone();
        let pivot_poly = std::mem::replace(&mut polys[k], Polynomial::zero(d));
        let pivot = pivot_poly.coeff_ref(&beta).expect("lm is in the support");
        assert!(!num_traits::Zero::is_zero(pivot), "pivot coefficient vanished at step {}", k + 1);
        for (j, pj) in polys.iter_mut().enumerate() {
            if j == k {
                continue;
            }
            if let Some(c) = pj.coeff_ref(&beta) {
                let factor = c / pivot;
                ops.div += 1;
                pj.sub_scaled(&factor, &pivot_poly, ops);
            }
        }
        polys[k] = pivot_poly;
        least.push(beta);
    }
    Ok(ReverseReducedBasis { polys, least_monomials: least })
}

/// Rank of the coefficient matrix of `ps` over their union support.
pub fn rank_of(ps: &[Polynomial]) -> usize {
    let cols: Vec<_> = support_union(ps).into_iter().collect();
    let rows: Vec<Vec<Rational>> = ps
        .iter()
        .map(|p| cols.iter().map(|e| p.coeff(e)).collect())
        .collect();
    linalg::rank(&rows)
}

fn exclusive<F>(ps: &[Polynomial], pick: F) -> bool
where
    F: Fn(&Polynomial) -> Result<&ExponentVector>,
{
    if rank_of(ps) != ps.len() {
        return false;
    }
    ps.iter().enumerate().all(|(i, p)| {
        let Ok(m) = pick(p) else { return false };
        ps.iter().enumerate().all(|(j, q)| i == j || !q.contains(m))
    })
}

/// Linear independence plus `lm(P_i) ∉ Λ{P_j}` for `i ≠ j`.
pub fn is_reverse_reduced(ps: &[Polynomial], ord: &MonomialOrdering) -> bool {
    exclusive(ps, |p| p.least_monomial(ord))
}

/// Linear independence plus `LM(P_i) ∉ Λ{P_j}` for `i ≠ j`.
pub fn is_complete_reduced(ps: &[Polynomial], ord: &MonomialOrdering) -> bool {
    exclusive(ps, |p| p.leading_monomial(ord))
}
