use thiserror::Error;

use crate::index_set::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("weights are not generic: epsilon vanishes on {witness}")]
    NonGenericWeights { witness: IndexSet },
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("cannot parse weight {0:?} as an exact rational")]
    ParseWeight(String),
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
}
