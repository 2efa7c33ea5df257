//! Deterministic random instance generation for tests and benchmarks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::functional::{ConditionSpace, InterpolationProblem, Point};
use crate::polyring::{ExponentVector, MonomialOrdering, OrderKind, Polynomial, Rational};
use crate::rcrb::rank_of;

pub use rand::SeedableRng;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` distinct integer points with coordinates in `[-bound, bound]`.
///
/// Panics if the grid holds fewer than `n` points.
pub fn random_points<R: Rng>(rng: &mut R, nvars: usize, n: usize, bound: i64) -> Vec<Point> {
    let side = (2 * bound + 1) as u128;
    assert!(side.pow(nvars as u32) >= n as u128, "grid too small for {n} distinct points");
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let coords: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-bound..=bound)).collect();
        if seen.insert(coords.clone()) {
            out.push(Point::from_ints(&coords));
        }
    }
    out
}

/// An ordering of random kind and random variable priority.
pub fn random_ordering<R: Rng>(rng: &mut R, nvars: usize) -> MonomialOrdering {
    let kind = *[OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex].choose(rng).expect("nonempty");
    random_priority(rng, kind, nvars)
}

pub fn random_priority<R: Rng>(rng: &mut R, kind: OrderKind, nvars: usize) -> MonomialOrdering {
    let mut priority: Vec<usize> = (0..nvars).collect();
    priority.shuffle(rng);
    MonomialOrdering::new(kind, priority).expect("shuffled permutation")
}

/// Random polynomial with up to `terms` terms of degree `<= max_degree` and
/// integer coefficients in `[-coeff_bound, coeff_bound]`.
pub fn random_polynomial<R: Rng>(rng: &mut R, nvars: usize, terms: usize, max_degree: u32, coeff_bound: i64) -> Polynomial {
    let monomials = ExponentVector::all_up_to_degree(nvars, max_degree);
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        let e = monomials.choose(rng).expect("nonempty").clone();
        let c: i64 = rng.gen_range(-coeff_bound..=coeff_bound);
        p.add_term(e, Rational::from_integer(c.into()));
    }
    p
}

/// A basis of the span of `f` and all of its partial derivatives, which is
/// D-invariant by construction.
pub fn derivative_closure(f: &Polynomial) -> Vec<Polynomial> {
    let d = f.nvars();
    let mut all = Vec::new();
    let mut frontier = vec![f.clone()];
    let mut seen = BTreeSet::new();
    while let Some(p) = frontier.pop() {
        if p.is_zero() || !seen.insert(format!("{p:?}")) {
            continue;
        }
        for var in 0..d {
            frontier.push(p.derivative(var));
        }
        all.push(p);
    }
    // smallest degree first so that the constant leads
    all.sort_by_key(|p| p.degree());
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in all {
        basis.push(p);
        if rank_of(&basis) < basis.len() {
            basis.pop();
        }
    }
    basis
}

/// A Hermite problem: each point carries the derivative closure of a random
/// polynomial, with at most `max_functionals` functionals overall.
pub fn random_hermite_problem<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_functionals: usize,
    ordering: MonomialOrdering,
) -> InterpolationProblem {
    loop {
        let npoints = rng.gen_range(1..=3);
        let points = random_points(rng, nvars, npoints, 3);
        let mut conditions = Vec::new();
        let mut total = 0;
        for point in points {
            let f = if rng.gen_bool(0.3) {
                Polynomial::one(nvars)
            } else {
                random_polynomial(rng, nvars, 2, 2, 3)
            };
            let gens = derivative_closure(&f);
            if gens.is_empty() {
                continue;
            }
            total += gens.len();
            conditions.push(ConditionSpace::new(point, gens));
        }
        if total == 0 || total > max_functionals {
            continue;
        }
        return InterpolationProblem::new(ordering, conditions).expect("distinct points");
    }
}
