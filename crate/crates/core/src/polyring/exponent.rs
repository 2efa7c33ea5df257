use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Exponent vector `α` of the monomial `X^α = x_1^{α_1} ⋯ x_d^{α_d}`.
///
/// The derived `Ord` is plain index-wise lexicographic comparison. It is only
/// used as a storage key; ordering-sensitive code goes through
/// [`MonomialOrdering`](super::MonomialOrdering).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// The unit vector `ε_j`, i.e. the monomial `x_j`.
    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Self(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `X^self * X^other`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `X^self / X^other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self + ε_var`.
    pub fn incremented(&self, var: usize) -> Self {
        let mut e = self.0.clone();
        e[var] += 1;
        Self(e)
    }

    /// `self - ε_var`, if that entry is positive.
    pub fn decremented(&self, var: usize) -> Option<Self> {
        let mut e = self.0.clone();
        e[var] = e[var].checked_sub(1)?;
        Some(Self(e))
    }

    /// `α! = α_1! α_2! ⋯ α_d!`.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.0 {
            for k in 2..=e {
                acc *= k;
            }
        }
        acc
    }

    /// Renders the monomial over the given variable names, e.g. `x^2*y`.
    pub fn to_text<S: AsRef<str>>(&self, vars: &[S]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = vars[i].as_ref();
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Every exponent vector in `nvars` variables of total degree `<= max_degree`.
    pub fn all_up_to_degree(nvars: usize, max_degree: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if pos == current.len() {
                out.push(ExponentVector(current.clone()));
                return;
            }
            for e in 0..=left {
                current[pos] = e;
                rec(pos + 1, left - e, current, out);
            }
            current[pos] = 0;
        }
        rec(0, max_degree, &mut current, &mut out);
        out
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_text(&names))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_of_multi_index() {
        assert_eq!(ExponentVector::from([3, 2, 0]).factorial(), BigInt::from(12));
        assert_eq!(ExponentVector::zero(3).factorial(), BigInt::from(1));
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = ExponentVector::from([1, 2]);
        let b = ExponentVector::from([2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.checked_div(&a), Some(ExponentVector::from([1, 0])));
        assert_eq!(a.checked_div(&b), None);
        assert_eq!(a.lcm(&ExponentVector::from([3, 0])), ExponentVector::from([3, 2]));
    }

    #[test]
    fn enumerates_monomials_by_degree() {
        // C(d + k, d) monomials of degree <= k
        assert_eq!(ExponentVector::all_up_to_degree(2, 3).len(), 10);
        assert_eq!(ExponentVector::all_up_to_degree(3, 2).len(), 10);
        assert_eq!(ExponentVector::all_up_to_degree(1, 0).len(), 1);
    }

    #[test]
    fn renders_text() {
        let vars = ["x", "y"];
        assert_eq!(ExponentVector::from([2, 1]).to_text(&vars), "x^2*y");
        assert_eq!(ExponentVector::zero(2).to_text(&vars), "1");
    }
}
