//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::polyring::Rational;

/// Reduces `rows` to row echelon form in place and returns the rank.
fn echelon(rows: &mut [Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut rows = matrix.to_vec();
    echelon(&mut rows)
}

/// Solves the square system `matrix * x = rhs`; `None` when singular.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n);
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    // Pivot only within the coefficient block.
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut().skip(col) {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            let (pivot_row, row) = if r < col {
                let (a, b) = aug.split_at_mut(col);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = aug.split_at_mut(r);
                (&a[col], &mut b[0])
            };
            for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().expect("augmented column")).collect())
}

pub fn is_nonsingular(matrix: &[Vec<Rational>]) -> bool {
    matrix.iter().all(|r| r.len() == matrix.len()) && rank(matrix) == matrix.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solves_small_system() {
        let a = m(&[&[0, 1], &[2, 1]]);
        let b = [Rational::from_integer(3.into()), Rational::from_integer(5.into())];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![Rational::from_integer(1.into()), Rational::from_integer(3.into())]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &b).is_none());
    }
}
