use hypoly_combinatorics::{CombinatoricsError, IndexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectionError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("{set} is not a short set of cardinality at least 2")]
    SetNotShort { set: IndexSet },
    #[error("monomial has degree {found}, integration needs degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("pairing entry ({row},{col}) is {value}, not an integer")]
    NonIntegerPairing { row: usize, col: usize, value: String },
    #[error("recursion reached an unexpected shape: {0}")]
    RecursionShape(String),
    #[error("comparison is degenerate: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, IntersectionError>;
