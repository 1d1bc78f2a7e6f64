use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::CombinatoricsError;
use crate::perturbed::Perturbed;
use crate::scalar::Scalar;
use crate::Rational;

/// A positive weight vector `(α₁, …, α_n)`, `n ≥ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights<T> {
    entries: Vec<T>,
}

impl<T: Scalar> Weights<T> {
    pub fn new(entries: Vec<T>) -> Result<Self, CombinatoricsError> {
        if entries.len() < 3 {
            return Err(CombinatoricsError::InvalidWeights(format!(
                "need at least 3 weights, got {}",
                entries.len()
            )));
        }
        if let Some(i) = entries.iter().position(|a| !a.is_positive()) {
            return Err(CombinatoricsError::InvalidWeights(format!(
                "weight {} is not strictly positive: {:?}",
                i + 1,
                entries[i]
            )));
        }
        Ok(Weights { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// `α_i`, 1-based.
    pub fn alpha(&self, i: usize) -> &T {
        &self.entries[i - 1]
    }

    pub fn total(&self) -> T {
        crate::scalar::sum(self.entries.iter().cloned())
    }

    /// `sigma[k]` is the old index placed at new position `k + 1`.
    pub fn permuted(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.n());
        Weights { entries: sigma.iter().map(|&i| self.entries[i - 1].clone()).collect() }
    }

    pub fn lift(&self) -> Weights<Perturbed<T>> {
        Weights { entries: self.entries.iter().cloned().map(Perturbed::constant).collect() }
    }
}

impl<T: Scalar + One> Weights<T> {
    /// Adds `+ε_level` to coordinate `coord` (1-based).
    pub fn perturb(&self, coord: usize, level: usize) -> Weights<Perturbed<T>> {
        let mut lifted = self.lift();
        let bumped = lifted.entries[coord - 1].clone() + Perturbed::infinitesimal(level);
        lifted.entries[coord - 1] = bumped;
        lifted
    }
}

impl<T> Deref for Weights<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.entries
    }
}

impl Weights<Rational> {
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self, CombinatoricsError> {
        let entries = items.iter().map(|s| parse_rational(s.as_ref())).collect::<Result<_, _>>()?;
        Weights::new(entries)
    }

    pub fn from_integers(items: &[i64]) -> Result<Self, CombinatoricsError> {
        Weights::new(items.iter().map(|&a| Rational::from_integer(BigInt::from(a))).collect())
    }

    /// `λα` for a positive rational `λ`.
    pub fn scaled(&self, lambda: &Rational) -> Result<Self, CombinatoricsError> {
        Weights::new(self.entries.iter().map(|a| a * lambda).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(|a| a.to_string()).collect()
    }
}

impl Serialize for Weights<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(|a| a.to_string()))
    }
}

/// Parses `"a"` or `"a/b"`; decimal and exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, CombinatoricsError> {
    let t = s.trim();
    let bad = || CombinatoricsError::ParseWeight(s.to_string());
    if t.is_empty() || t.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let r = Rational::from_str(t).map_err(|_| bad())?;
    if r.denom().is_zero() {
        return Err(bad());
    }
    Ok(r)
}
