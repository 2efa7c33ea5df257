mod common;

use std::collections::BTreeSet;

use idealgb::staircase::condition_matrix;
use idealgb::workload::{random_ordering, random_polynomial, rng};
use idealgb::{
    compare_sets, corners, is_minimal_basis, parse_polynomial, quotient_basis, reverse_reduce, ExponentVector, LowerSet,
    MonomialOrdering, OrderKind, Polynomial, Rational, SetOrder,
};
use rand::Rng;

/// Random lower set: the downward closure of a few random monomials.
fn random_lower_set<R: Rng>(r: &mut R, nvars: usize, max_degree: u32) -> LowerSet {
    let mut set = BTreeSet::new();
    let gens = r.gen_range(1..=4);
    for _ in 0..gens {
        let mut e: Vec<u32> = vec![0; nvars];
        let mut left = r.gen_range(0..=max_degree);
        for slot in e.iter_mut() {
            let k = r.gen_range(0..=left);
            *slot = k;
            left -= k;
        }
        // all divisors
        let top = ExponentVector::new(e);
        for m in ExponentVector::all_up_to_degree(nvars, top.degree()) {
            if m.divides(&top) {
                set.insert(m);
            }
        }
    }
    LowerSet::new(set).unwrap()
}

#[test]
fn corners_cover_exactly_the_complement() {
    let mut r = rng(17);
    for _ in 0..200 {
        let d = r.gen_range(1..=3);
        let qb = random_lower_set(&mut r, d, 6);
        let cs = corners(&qb);
        let top = qb.monomials().iter().map(ExponentVector::degree).max().unwrap() + 2;
        for m in ExponentVector::all_up_to_degree(d, top) {
            assert_eq!(cs.covers(&m), !qb.contains(&m), "{m}");
        }
        // removing any corner leaves some outside monomial uncovered
        for c in cs.monomials() {
            assert!(cs.monomials().iter().filter(|o| *o != c).all(|o| !o.divides(c)));
        }
    }
}

#[test]
fn set_comparison_is_antisymmetric() {
    let mut r = rng(5);
    let pool = ExponentVector::all_up_to_degree(2, 3);
    for _ in 0..500 {
        let ord = random_ordering(&mut r, 2);
        let pick = |r: &mut rand_chacha::ChaCha8Rng| -> BTreeSet<ExponentVector> {
            (0..4).map(|_| pool[r.gen_range(0..pool.len())].clone()).collect()
        };
        let (a, b) = (pick(&mut r), pick(&mut r));
        let ab = compare_sets(&ord, &a, &b);
        let ba = compare_sets(&ord, &b, &a);
        let flipped = match ab {
            SetOrder::Less => SetOrder::Greater,
            SetOrder::Greater => SetOrder::Less,
            SetOrder::Equal => SetOrder::Equal,
        };
        assert_eq!(ba, flipped);
        assert_eq!(ab == SetOrder::Equal, a == b);
    }
}

#[test]
fn condition_matrix_is_diagonal_on_reverse_reduced_bases() {
    let mut r = rng(41);
    let mut done = 0;
    while done < 100 {
        let d = r.gen_range(2..=3);
        let ord = random_ordering(&mut r, d);
        let ps: Vec<Polynomial> = (0..4).map(|_| random_polynomial(&mut r, d, 4, 3, 5)).collect();
        let Ok(red) = reverse_reduce(&ps, &ord) else { continue };
        let m = condition_matrix(&red.polys, &red.least_monomials);
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i == j {
                    let beta = &red.least_monomials[i];
                    let expected = Rational::from_integer(beta.factorial()) * red.polys[i].coeff(beta);
                    assert_eq!(v, &expected);
                    assert!(!num_traits::Zero::is_zero(v));
                } else {
                    assert!(num_traits::Zero::is_zero(v));
                }
            }
        }
        done += 1;
    }
}

/// Every `n`-subset of `pool`, by brute force.
fn subsets(pool: &[ExponentVector], n: usize) -> Vec<Vec<ExponentVector>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, first) in pool.iter().enumerate() {
        for mut rest in subsets(&pool[i + 1..], n - 1) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
    }
    out
}

/// Exhaustive search for the `≺`-minimal interpolation monomial basis.
pub fn brute_force_minimal_basis(
    ord: &MonomialOrdering,
    conditions: &[Polynomial],
    max_degree: u32,
) -> BTreeSet<ExponentVector> {
    let d = conditions[0].nvars();
    let pool = ExponentVector::all_up_to_degree(d, max_degree);
    let mut best: Option<BTreeSet<ExponentVector>> = None;
    for s in subsets(&pool, conditions.len()) {
        let m = condition_matrix(conditions, &s);
        if common::bareiss_rank(
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|c| {
                            assert!(c.is_integer());
                            c.to_integer()
                        })
                        .collect()
                })
                .collect(),
        ) != conditions.len()
        {
            continue;
        }
        let set: BTreeSet<_> = s.into_iter().collect();
        best = match best {
            Some(b) if compare_sets(ord, &b, &set) != SetOrder::Greater => Some(b),
            _ => Some(set),
        };
    }
    best.expect("some interpolation basis exists")
}

#[test]
fn example_minimal_basis_by_exhaustive_search() {
    let vars = ["x", "y", "z"];
    let ord = MonomialOrdering::new(OrderKind::Grlex, vec![0, 1, 2]).unwrap();
    let conds: Vec<_> = ["1", "y + z", "x"].iter().map(|s| parse_polynomial(s, &vars).unwrap()).collect();
    let best = brute_force_minimal_basis(&ord, &conds, 3);
    let zx: BTreeSet<_> = [[0, 0, 0], [0, 0, 1], [1, 0, 0]].into_iter().map(ExponentVector::from).collect();
    assert_eq!(best, zx);
    let qb = quotient_basis(&reverse_reduce(&conds, &ord).unwrap()).unwrap();
    assert_eq!(qb.monomials(), &zx);
    assert!(is_minimal_basis(&ord, &qb, &conds));
}

#[test]
fn quotient_basis_is_minimal_for_random_origin_conditions() {
    // brute force stays small: d = 2, n <= 4, degree <= 3
    let mut r = rng(8);
    let mut done = 0;
    while done < 25 {
        let ord = random_ordering(&mut r, 2);
        let n = r.gen_range(2..=4);
        let f = random_polynomial(&mut r, 2, 3, 2, 4);
        let conds = idealgb::workload::derivative_closure(&f);
        if conds.len() != n {
            continue;
        }
        let red = reverse_reduce(&conds, &ord).unwrap();
        let qb = quotient_basis(&red).unwrap();
        assert!(is_minimal_basis(&ord, &qb, &conds));
        assert_eq!(&brute_force_minimal_basis(&ord, &conds, 3), qb.monomials());
        done += 1;
    }
}
