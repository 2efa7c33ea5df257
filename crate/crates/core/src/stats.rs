//! Exact-arithmetic operation counting for benchmark reports.

use std::ops::AddAssign;

/// Tally of rational operations performed by an elimination kernel.
///
/// Counting is explicit: kernels take `&mut OpCount` and bump it as they
/// go, so there is no hidden global state.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCount {
    pub mul: u64,
    pub add: u64,
    pub div: u64,
}

impl OpCount {
    pub fn total(&self) -> u64 {
        self.mul + self.add + self.div
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: Self) {
        self.mul += rhs.mul;
        self.add += rhs.add;
        self.div += rhs.div;
    }
}
