#![allow(dead_code)]

use idealgb::{support_union, ExponentVector, MonomialOrdering, OrderKind, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) elimination rank over the integers.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Coefficient rows over `cols`, each scaled by the lcm of its denominators.
pub fn integer_rows(ps: &[Polynomial], cols: &[ExponentVector]) -> Vec<Vec<BigInt>> {
    ps.iter()
        .map(|p| {
            let coeffs: Vec<Rational> = cols.iter().map(|e| p.coeff(e)).collect();
            let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

pub fn rank(ps: &[Polynomial]) -> usize {
    let cols: Vec<_> = support_union(ps).into_iter().collect();
    bareiss_rank(integer_rows(ps, &cols))
}

pub fn same_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let joint: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    let r = rank(&joint);
    r == rank(a) && r == rank(b)
}

pub fn all_orderings(nvars: usize) -> Vec<MonomialOrdering> {
    let kinds = [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex];
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for v in 0..nvars {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..=p.len()).map(move |i| {
                let mut q = p.clone();
                q.insert(i, v);
                q
            }))
            .collect();
    }
    kinds
        .iter()
        .flat_map(|&k| perms.iter().map(move |p| MonomialOrdering::new(k, p.clone()).unwrap()))
        .collect()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
