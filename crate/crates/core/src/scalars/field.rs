use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Q;

/// Minimal exact field interface shared by rationals, the eighth cyclotomic
/// field and rational functions over it.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn recip(&self) -> Option<Self>;

    fn from_q(x: &Q) -> Self;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.times(&r))
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self))
        }
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
}
