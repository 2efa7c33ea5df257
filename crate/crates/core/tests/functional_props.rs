mod common;

use idealgb::functional::{apply_functional, shift_conditions, truncated_exponential, ConditionSpace, Point};
use idealgb::workload::{random_hermite_problem, random_ordering, random_polynomial, rng};
use idealgb::{ExponentVector, MonomialOrdering, OrderKind, Polynomial, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn monomial_pairs_with_itself_to_factorial(alpha in (1usize..=4).prop_flat_map(|d| proptest::collection::vec(0u32..=6, d))) {
        prop_assume!(alpha.iter().sum::<u32>() <= 6);
        let e = ExponentVector::new(alpha);
        let m = Polynomial::monomial(e.clone(), Rational::from_integer(1.into()));
        prop_assert_eq!(apply_functional(&m, &m), Rational::from_integer(e.factorial()));
    }

    #[test]
    fn exponential_functional_is_point_evaluation(
        theta in proptest::collection::vec(-3i64..=3, 2..=3),
        seed in any::<u64>(),
        n in 0u32..=5,
    ) {
        let d = theta.len();
        let point = Point::from_ints(&theta);
        let f = random_polynomial(&mut rng(seed), d, 5, n, 9);
        let e = truncated_exponential(&point, n);
        prop_assert_eq!(apply_functional(&e, &f), f.evaluate(point.coords()).unwrap());
    }
}

#[test]
fn exponential_matches_repeated_multiplication() {
    let theta = Point::new(vec![Rational::new(1.into(), 2.into()), Rational::from_integer((-3).into())]);
    let linear = theta.linear_form();
    let mut expected = Polynomial::one(2);
    let mut power = Polynomial::one(2);
    let mut fact = Rational::from_integer(1.into());
    for j in 1..=7i64 {
        power = &power * &linear;
        fact *= Rational::from_integer(j.into());
        expected = &expected + &power.scale(&fact.recip());
    }
    assert_eq!(truncated_exponential(&theta, 7), expected);
}

#[test]
fn shifted_conditions_count_and_degree() {
    let mut r = rng(11);
    for _ in 0..50 {
        let ord = random_ordering(&mut r, 2);
        let problem = random_hermite_problem(&mut r, 2, 8, ord);
        let n = problem.functional_count();
        let shifted = shift_conditions(&problem);
        assert_eq!(shifted.len(), n);
        assert!(shifted.iter().all(|p| p.degree().unwrap_or(0) as usize <= n));
    }
}

#[test]
fn shifted_functionals_reproduce_the_original_conditions() {
    // δ_θ ∘ P(D) f = δ_0 ∘ λ_n(e^{θX} P)(D) f whenever deg f <= n
    let mut r = rng(5);
    for _ in 0..30 {
        let ord = MonomialOrdering::natural(OrderKind::Grlex, 2);
        let problem = random_hermite_problem(&mut r, 2, 6, ord);
        let n = problem.functional_count() as u32;
        let f = random_polynomial(&mut r, 2, 6, n, 5);
        let shifted = shift_conditions(&problem);
        let direct: Vec<Rational> = problem
            .conditions()
            .iter()
            .flat_map(|space: &ConditionSpace| {
                space.generators.iter().map(|g| idealgb::oracle::evaluate_functional(&space.point, g, &f))
            })
            .collect();
        let via_origin: Vec<Rational> = shifted.iter().map(|s| apply_functional(s, &f)).collect();
        assert_eq!(direct, via_origin);
    }
}
