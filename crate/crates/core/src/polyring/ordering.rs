use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::ExponentVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Pure lexicographic.
    Lex,
    /// Total degree first, lexicographic tie-break.
    Grlex,
    /// Total degree first, then the monomial with the smaller exponent in the
    /// lowest-priority differing variable is larger.
    Grevlex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::InvalidOrdering(format!("unknown ordering kind {other:?}"))),
        }
    }
}

/// A monomial ordering `≺`: an ordering kind plus a variable priority.
///
/// `priority[0]` is the most significant variable. `grlex(y ≺ x)` over
/// variables `[x, y]` is `MonomialOrdering::new(OrderKind::Grlex, vec![0, 1])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrdering {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrdering {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= priority.len() || seen[v] {
                return Err(Error::InvalidOrdering(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(Self { kind, priority })
    }

    /// `kind` with variable `0` most significant.
    pub fn natural(kind: OrderKind, nvars: usize) -> Self {
        Self { kind, priority: (0..nvars).collect() }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        let (a, b) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::Grlex => degree(a).cmp(&degree(b)).then_with(|| self.lex(a, b)),
            OrderKind::Grevlex => degree(a).cmp(&degree(b)).then_with(|| {
                for &v in self.priority.iter().rev() {
                    if a[v] != b[v] {
                        return b[v].cmp(&a[v]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.priority {
            if a[v] != b[v] {
                return a[v].cmp(&b[v]);
            }
        }
        Ordering::Equal
    }

    pub fn max<'a, I>(&self, monomials: I) -> Option<&'a ExponentVector>
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        monomials.into_iter().max_by(|a, b| self.compare(a, b))
    }

    pub fn min<'a, I>(&self, monomials: I) -> Option<&'a ExponentVector>
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        monomials.into_iter().min_by(|a, b| self.compare(a, b))
    }

    /// Sorts ascending under `≺`.
    pub fn sort(&self, monomials: &mut [ExponentVector]) {
        monomials.sort_by(|a, b| self.compare(a, b));
    }
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(e: [u32; N]) -> ExponentVector {
        ExponentVector::from(e)
    }

    #[test]
    fn grlex_breaks_degree_ties_lexicographically() {
        // grlex(y < x)
        let ord = MonomialOrdering::new(OrderKind::Grlex, vec![0, 1]).unwrap();
        assert_eq!(ord.compare(&ev([0, 2]), &ev([1, 1])), Ordering::Less);
        assert_eq!(ord.compare(&ev([1, 1]), &ev([2, 0])), Ordering::Less);
        assert_eq!(ord.compare(&ev([3, 0]), &ev([0, 1])), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal() {
        for kind in [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex] {
            let ord = MonomialOrdering::natural(kind, 2);
            assert_eq!(ord.compare(&ev([0, 0]), &ev([1, 0])), Ordering::Less);
            assert_eq!(ord.compare(&ev([0, 0]), &ev([0, 0])), Ordering::Equal);
        }
    }

    #[test]
    fn three_variable_priority() {
        // grlex(z < y < x) with variables [x, y, z]
        let ord = MonomialOrdering::new(OrderKind::Grlex, vec![0, 1, 2]).unwrap();
        assert_eq!(ord.compare(&ev([1, 0, 0]), &ev([0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.compare(&ev([0, 0, 1]), &ev([0, 1, 0])), Ordering::Less);
    }

    #[test]
    fn grevlex_differs_from_grlex() {
        // x*z^2 vs y^3: grlex looks at x first, grevlex at z first.
        let a = ev([1, 0, 2]);
        let b = ev([0, 3, 0]);
        let grlex = MonomialOrdering::natural(OrderKind::Grlex, 3);
        let grevlex = MonomialOrdering::natural(OrderKind::Grevlex, 3);
        assert_eq!(grlex.compare(&a, &b), Ordering::Greater);
        assert_eq!(grevlex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn reversed_priority() {
        // lex(x < y)
        let ord = MonomialOrdering::new(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(ord.compare(&ev([5, 0]), &ev([0, 1])), Ordering::Less);
    }

    #[test]
    fn rejects_bad_priority() {
        assert!(MonomialOrdering::new(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrdering::new(OrderKind::Lex, vec![0, 2]).is_err());
        assert!("grlex".parse::<OrderKind>().is_ok());
        assert!("revlex".parse::<OrderKind>().is_err());
    }
}
