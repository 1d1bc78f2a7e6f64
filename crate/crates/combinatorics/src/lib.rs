//! Exact combinatorics of weight vectors: `ε_S`, genericity, short sets,
//! walls and chambers.

mod chamber;
mod error;
mod index_set;
mod perturbed;
mod scalar;
mod weights;

pub use chamber::{
    chamber_signature, ensure_generic, epsilon_s, is_generic, is_maximal_short, is_short,
    maximal_short_sets, nongeneric_witness, polygon_nonempty, short_sets, ChamberSignature, Wall,
};
pub use error::CombinatoricsError;
pub use index_set::{IndexSet, MAX_N};
pub use perturbed::Perturbed;
pub use scalar::{sum, Scalar};
pub use weights::{parse_rational, Weights};

pub use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;
pub type PerturbedWeight = Perturbed<Rational>;
pub type WeightVector = Weights<Rational>;
pub type PerturbedWeights = Weights<PerturbedWeight>;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}
