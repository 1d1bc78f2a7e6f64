use hypoly_combinatorics::{Rational, WeightVector};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{PhbError, Result};

/// Flag weights `0 ≤ β₁(x_i) < β₂(x_i) < 1` at `n` marked points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicWeights {
    beta1: Vec<Rational>,
    beta2: Vec<Rational>,
}

impl ParabolicWeights {
    pub fn new(beta1: Vec<Rational>, beta2: Vec<Rational>) -> Result<Self> {
        if beta1.len() != beta2.len() {
            return Err(PhbError::InvalidWeights(format!(
                "{} lower weights but {} upper weights",
                beta1.len(),
                beta2.len()
            )));
        }
        if beta1.len() < 3 {
            return Err(PhbError::InvalidWeights("need at least 3 marked points".into()));
        }
        for (i, (b1, b2)) in beta1.iter().zip(&beta2).enumerate() {
            if b1 < &Rational::zero() || b1 >= b2 || b2 >= &Rational::one() {
                return Err(PhbError::InvalidWeights(format!(
                    "point {}: need 0 ≤ {b1} < {b2} < 1",
                    i + 1
                )));
            }
        }
        Ok(ParabolicWeights { beta1, beta2 })
    }

    /// `β₁ = 0`, `β₂ = α / (1 + Σα)`: a weight pair whose difference is proportional to `α`.
    pub fn from_alpha(alpha: &WeightVector) -> Result<Self> {
        let scale = Rational::one() / (Rational::one() + alpha.total());
        let beta2 = alpha.iter().map(|a| a * &scale).collect();
        ParabolicWeights::new(vec![Rational::zero(); alpha.n()], beta2)
    }

    pub fn n(&self) -> usize {
        self.beta1.len()
    }

    pub fn beta1(&self) -> &[Rational] {
        &self.beta1
    }

    pub fn beta2(&self) -> &[Rational] {
        &self.beta2
    }

    /// `α_i = β₂(x_i) − β₁(x_i)`.
    pub fn alpha(&self) -> WeightVector {
        let entries = self.beta1.iter().zip(&self.beta2).map(|(b1, b2)| b2 - b1).collect();
        WeightVector::new(entries).expect("validated weights give a positive vector")
    }
}

#[derive(Serialize)]
struct Wire {
    beta1: Vec<String>,
    beta2: Vec<String>,
}

impl Serialize for ParabolicWeights {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            beta1: self.beta1.iter().map(ToString::to_string).collect(),
            beta2: self.beta2.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}
