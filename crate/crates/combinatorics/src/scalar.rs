use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

/// An exact, totally ordered additive scalar.
///
/// Weight comparisons must be decidable, so floating point types are excluded
/// by the `Ord` bound.
pub trait Scalar:
    Clone + Ord + Debug + Zero + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn signum_i8(&self) -> i8 {
        match self.cmp(&Self::zero()) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }

    fn abs_value(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl<T> Scalar for T where
    T: Clone + Ord + Debug + Zero + Add<Output = T> + Sub<Output = T> + Neg<Output = T>
{
}

pub fn sum<T: Scalar, I: IntoIterator<Item = T>>(items: I) -> T {
    items.into_iter().fold(T::zero(), |acc, x| acc + x)
}
