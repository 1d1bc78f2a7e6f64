use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// `base + c₁ε₁ + c₂ε₂ + …` with `1 ≫ ε₁ ≫ ε₂ ≫ …`.
///
/// Ordering is lexicographic on `(base, c₁, c₂, …)`, missing coefficients
/// read as zero.
#[derive(Clone)]
pub struct Perturbed<T> {
    base: T,
    eps: Vec<T>,
}

impl<T: Scalar> Perturbed<T> {
    pub fn new(base: T, eps: Vec<T>) -> Self {
        let mut p = Perturbed { base, eps };
        p.trim();
        p
    }

    pub fn constant(base: T) -> Self {
        Perturbed { base, eps: Vec::new() }
    }

    pub fn base(&self) -> &T {
        &self.base
    }

    pub fn eps_coeffs(&self) -> &[T] {
        &self.eps
    }

    /// Highest infinitesimal level with a nonzero coefficient (0 if none).
    pub fn depth(&self) -> usize {
        self.eps.len()
    }

    pub fn coeff(&self, level: usize) -> T {
        if level == 0 {
            return self.base.clone();
        }
        self.eps.get(level - 1).cloned().unwrap_or_else(T::zero)
    }

    fn trim(&mut self) {
        while self.eps.last().is_some_and(|c| c.is_zero()) {
            self.eps.pop();
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.eps.len().max(other.eps.len());
        let eps = (1..=len).map(|k| f(self.coeff(k), other.coeff(k))).collect();
        Perturbed::new(f(self.base.clone(), other.base.clone()), eps)
    }
}

impl<T: Scalar + One> Perturbed<T> {
    /// The infinitesimal `ε_level` (levels start at 1).
    pub fn infinitesimal(level: usize) -> Self {
        assert!(level >= 1, "infinitesimal levels start at 1");
        let mut eps = vec![T::zero(); level];
        eps[level - 1] = T::one();
        Perturbed { base: T::zero(), eps }
    }
}

impl<T: Scalar> From<T> for Perturbed<T> {
    fn from(base: T) -> Self {
        Perturbed::constant(base)
    }
}

impl<T: Scalar> PartialEq for Perturbed<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Perturbed<T> {}

impl<T: Scalar> PartialOrd for Perturbed<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Perturbed<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.eps.len().max(other.eps.len());
        (0..=len)
            .map(|k| self.coeff(k).cmp(&other.coeff(k)))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

impl<T: Scalar> Add for Perturbed<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl<T: Scalar> Sub for Perturbed<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl<T: Scalar> Neg for Perturbed<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Perturbed {
            base: -self.base,
            eps: self.eps.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> Zero for Perturbed<T> {
    fn zero() -> Self {
        Perturbed::constant(T::zero())
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.eps.iter().all(Zero::is_zero)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Perturbed<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for (k, c) in self.eps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-{}ε{}", c.abs_value(), k + 1)?;
            } else {
                write!(f, "+{}ε{}", c, k + 1)?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Perturbed<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.base)?;
        for (k, c) in self.eps.iter().enumerate() {
            write!(f, " + {:?}ε{}", c, k + 1)?;
        }
        Ok(())
    }
}
