//! From interpolation conditions to the reduced Gröbner basis.
//!
//! Pipeline: shift every condition to the origin, reverse-reduce, read the
//! quotient basis off the least monomials, take its corners, and write each
//! basis element as `X^α − Σ_j (α! P̂_j(α)) / (β_j! P̂_j(β_j)) X^{β_j}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::functional::{shift_conditions, validate_d_invariance, InterpolationProblem, Point};
use crate::linalg;
use crate::oracle::Certificate;
use crate::polyring::{MonomialOrdering, Polynomial, Rational};
use crate::rcrb::{reverse_reduce_counted, ReverseReducedBasis};
use crate::staircase::{condition_matrix, corners, quotient_basis, LowerSet, StaircaseCorners};
use crate::stats::OpCount;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerResult {
    pub ordering: MonomialOrdering,
    pub quotient_basis: LowerSet,
    pub leading_monomials: StaircaseCorners,
    /// Monic, sorted ascending by leading monomial.
    pub basis: Vec<Polynomial>,
    pub certificate: Option<Certificate>,
}

impl GroebnerResult {
    /// Same ideal data, ignoring any attached certificate.
    pub fn same_basis(&self, other: &GroebnerResult) -> bool {
        self.ordering == other.ordering
            && self.quotient_basis == other.quotient_basis
            && self.leading_monomials == other.leading_monomials
            && self.basis == other.basis
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HermiteOptions {
    pub check_d_invariance: bool,
}

impl Default for HermiteOptions {
    fn default() -> Self {
        Self { check_d_invariance: true }
    }
}

pub fn groebner_lagrange(points: &[Point], ord: &MonomialOrdering) -> Result<GroebnerResult> {
    groebner_lagrange_counted(points, ord, &mut OpCount::default())
}

/// [`groebner_lagrange`] with an operation tally covering elimination and
/// the tail formula.
pub fn groebner_lagrange_counted(
    points: &[Point],
    ord: &MonomialOrdering,
    ops: &mut OpCount,
) -> Result<GroebnerResult> {
    let problem = InterpolationProblem::lagrange(points, ord.clone())?;
    run_pipeline(&problem, ops)
}

pub fn groebner_hermite(problem: &InterpolationProblem) -> Result<GroebnerResult> {
    groebner_hermite_with(problem, HermiteOptions::default())
}

pub fn groebner_hermite_with(problem: &InterpolationProblem, options: HermiteOptions) -> Result<GroebnerResult> {
    if options.check_d_invariance {
        for (i, space) in problem.conditions().iter().enumerate() {
            validate_d_invariance(space).map_err(|e| match e {
                Error::DInvarianceViolation { generator, variable, .. } => {
                    Error::DInvarianceViolation { point_index: i, generator, variable }
                }
                other => other,
            })?;
        }
    }
    run_pipeline(problem, &mut OpCount::default())
}

fn run_pipeline(problem: &InterpolationProblem, ops: &mut OpCount) -> Result<GroebnerResult> {
    let ord = problem.ordering();
    let shifted = shift_conditions(problem);
    let reduced = reverse_reduce_counted(&shifted, ord, ops)?;
    let qb = quotient_basis(&reduced)?;
    let lead = corners(&qb);
    let mut basis: Vec<Polynomial> = lead
        .sorted(ord)
        .into_iter()
        .map(|alpha| tail_formula(&alpha, &reduced, ops))
        .collect();
    basis.sort_by(|a, b| {
        ord.compare(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
    });
    Ok(GroebnerResult {
        ordering: ord.clone(),
        quotient_basis: qb,
        leading_monomials: lead,
        basis,
        certificate: None,
    })
}

/// `G = X^α − Σ_j (α! P̂_j(α)) / (β_j! P̂_j(β_j)) X^{β_j}`.
fn tail_formula(alpha: &crate::ExponentVector, reduced: &ReverseReducedBasis, ops: &mut OpCount) -> Polynomial {
    let alpha_fact = Rational::from_integer(alpha.factorial());
    let mut g = Polynomial::monomial(alpha.clone(), Rational::one());
    for (pj, beta, pivot) in reduced.pivots() {
        assert_ne!(alpha, beta, "corner inside the quotient basis");
        let Some(c) = pj.coeff_ref(alpha) else { continue };
        let num = &alpha_fact * c;
        let den = Rational::from_integer(beta.factorial()) * pivot;
        ops.mul += 2;
        ops.div += 1;
        g.add_term(beta.clone(), -(num / den));
    }
    debug_assert!(g.coeff(alpha).is_one());
    g
}

/// The unique polynomial supported on the quotient basis whose functional
/// values are `values`, in the order of
/// [`shift_conditions`](crate::functional::shift_conditions).
pub fn interpolate(problem: &InterpolationProblem, values: &[Rational]) -> Result<Polynomial> {
    let n = problem.functional_count();
    if values.len() != n {
        return Err(Error::ValueCount { expected: n, found: values.len() });
    }
    let ord = problem.ordering();
    let shifted = shift_conditions(problem);
    let reduced = reverse_reduce_counted(&shifted, ord, &mut OpCount::default())?;
    let qb = quotient_basis(&reduced)?.sorted(ord);
    let matrix = condition_matrix(&shifted, &qb);
    let coeffs = linalg::solve(&matrix, values).expect("condition matrix on the quotient basis is nonsingular");
    let mut p = Polynomial::zero(problem.nvars());
    for (beta, c) in qb.into_iter().zip(coeffs) {
        if !c.is_zero() {
            p.add_term(beta, c);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functional::ConditionSpace;
    use crate::polyring::{parse_polynomial, OrderKind};

    const XY: [&str; 2] = ["x", "y"];

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &XY).unwrap()
    }

    fn grlex_xy() -> MonomialOrdering {
        MonomialOrdering::new(OrderKind::Grlex, vec![0, 1]).unwrap()
    }

    fn texts(ps: &[Polynomial], ord: &MonomialOrdering) -> Vec<String> {
        ps.iter().map(|g| g.to_text(ord, &XY)).collect()
    }

    fn golden_points() -> Vec<Point> {
        vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 2]), Point::from_ints(&[2, 1])]
    }

    fn hermite_problem() -> InterpolationProblem {
        InterpolationProblem::new(
            grlex_xy(),
            vec![
                ConditionSpace::new(Point::origin(2), vec![p("1"), p("x"), p("1/2*x^2 + y")]),
                ConditionSpace::new(Point::from_ints(&[1, 2]), vec![p("1"), p("x")]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn lagrange_example() {
        let ord = grlex_xy();
        let r = groebner_lagrange(&golden_points(), &ord).unwrap();
        assert_eq!(
            texts(&r.basis, &ord),
            ["y^2 + 2/3*x - 7/3*y", "x*y - 2/3*x - 2/3*y", "x^2 - 7/3*x + 2/3*y"]
        );
        let qb: Vec<_> = r.quotient_basis.sorted(&ord).iter().map(|e| e.to_text(&XY)).collect();
        assert_eq!(qb, ["1", "y", "x"]);
    }

    #[test]
    fn lagrange_intermediate_basis_matches_worked_example() {
        let ord = grlex_xy();
        let problem = InterpolationProblem::lagrange(&golden_points(), ord.clone()).unwrap();
        let reduced = crate::rcrb::reverse_reduce(&shift_conditions(&problem), &ord).unwrap();
        let expected = [
            p("1"),
            p("-2/3*x^3 + 2*x*y^2 + 5/3*y^3 - 2/3*x^2 + 4/3*x*y + 7/3*y^2 + 2*y"),
            p("5/6*x^3 + x^2*y - 1/3*y^3 + 7/6*x^2 + 2/3*x*y - 1/3*y^2 + x"),
        ];
        assert_eq!(reduced.polys[..2], expected[..2]);
        // Elimination keeps raw coefficients; the worked example shows the
        // third polynomial rescaled to make its x coefficient 1.
        let three_halves = Rational::new(3.into(), 2.into());
        assert_eq!(reduced.polys[2], expected[2].scale(&three_halves));
    }

    #[test]
    fn hermite_example() {
        let ord = grlex_xy();
        let r = groebner_hermite(&hermite_problem()).unwrap();
        assert_eq!(r.basis, vec![p("x^2 - x*y + 3/4*y^2 - y"), p("y^3 - 2*y^2"), p("x*y^2 - 2*x*y")]);
        let qb: Vec<_> = r.quotient_basis.sorted(&ord).iter().map(|e| e.to_text(&XY)).collect();
        assert_eq!(qb, ["1", "y", "x", "y^2", "x*y"]);
    }

    #[test]
    fn hermite_intermediate_basis_matches_worked_example() {
        let problem = hermite_problem();
        let reduced = crate::rcrb::reverse_reduce(&shift_conditions(&problem), problem.ordering()).unwrap();
        let l = p("x + 2*y");
        let pow = |k: u32| (0..k).fold(Polynomial::one(2), |acc, _| &acc * &l);
        let frac = |a: i64, b: i64| Rational::new(a.into(), b.into());
        let x = p("x");
        let p4 = [
            pow(5).scale(&frac(1, 120)),
            (&pow(4) * &x).scale(&frac(-1, 24)),
            pow(4).scale(&frac(1, 24)),
            (&pow(3) * &x).scale(&frac(-1, 6)),
            p("-1/3*x^3 - x^2*y + 4/3*y^3 - 3/2*x^2 + 2*y^2"),
        ]
        .iter()
        .fold(Polynomial::zero(2), |acc, t| &acc + t);
        let p5 = [
            (&pow(4) * &x).scale(&frac(1, 24)),
            (&pow(3) * &x).scale(&frac(1, 6)),
            p("1/2*x^3 + 2*x^2*y + 2*x*y^2 + x^2 + 2*x*y"),
        ]
        .iter()
        .fold(Polynomial::zero(2), |acc, t| &acc + t);
        assert_eq!(reduced.polys[..3], [p("1"), p("x"), p("1/2*x^2 + y")]);
        assert_eq!(reduced.polys[3], p4);
        assert_eq!(reduced.polys[4], p5);
    }

    #[test]
    fn single_point_gives_maximal_ideal() {
        let ord = grlex_xy();
        let r = groebner_lagrange(&[Point::origin(2)], &ord).unwrap();
        assert_eq!(r.basis, vec![p("y"), p("x")]);
        assert_eq!(r.quotient_basis.len(), 1);
    }

    #[test]
    fn first_order_jet_at_origin() {
        let ord = grlex_xy();
        let problem = InterpolationProblem::new(
            ord.clone(),
            vec![ConditionSpace::new(Point::origin(2), vec![p("1"), p("x"), p("y")])],
        )
        .unwrap();
        let r = groebner_hermite(&problem).unwrap();
        assert_eq!(r.basis, vec![p("y^2"), p("x*y"), p("x^2")]);
        assert_eq!(r.quotient_basis.len(), 3);
    }

    #[test]
    fn lagrange_encoded_as_hermite_agrees() {
        let ord = grlex_xy();
        let problem = InterpolationProblem::lagrange(&golden_points(), ord.clone()).unwrap();
        let a = groebner_hermite(&problem).unwrap();
        let b = groebner_lagrange(&golden_points(), &ord).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_problems() {
        let ord = grlex_xy();
        let dup = [Point::from_ints(&[1, 2]), Point::from_ints(&[1, 2])];
        assert!(matches!(groebner_lagrange(&dup, &ord), Err(Error::DuplicatePoints { .. })));

        let bad = InterpolationProblem::new(
            ord.clone(),
            vec![
                ConditionSpace::lagrange(Point::from_ints(&[3, 3])),
                ConditionSpace::new(Point::origin(2), vec![p("1"), p("x^2")]),
            ],
        )
        .unwrap();
        assert_eq!(
            groebner_hermite(&bad),
            Err(Error::DInvarianceViolation { point_index: 1, generator: 1, variable: 0 })
        );

        let dependent = InterpolationProblem::new(
            ord,
            vec![ConditionSpace::new(Point::origin(2), vec![p("1"), p("x"), p("2*x")])],
        )
        .unwrap();
        assert_eq!(groebner_hermite(&dependent), Err(Error::LinearDependence { step: 3 }));
    }

    #[test]
    fn interpolation_examples() {
        let ord = grlex_xy();
        let pts = golden_points();
        let problem = InterpolationProblem::lagrange(&pts, ord).unwrap();
        let int = |n: i64| Rational::from_integer(n.into());
        assert!(interpolate(&problem, &[int(0), int(0), int(0)]).unwrap().is_zero());
        assert_eq!(interpolate(&problem, &[int(1), int(1), int(1)]).unwrap(), Polynomial::one(2));
        let cardinal = interpolate(&problem, &[int(0), int(1), int(0)]).unwrap();
        let values: Vec<_> = pts.iter().map(|t| cardinal.evaluate(t.coords()).unwrap()).collect();
        assert_eq!(values, [int(0), int(1), int(0)]);
        assert!(matches!(interpolate(&problem, &[int(1)]), Err(Error::ValueCount { .. })));
    }
}
