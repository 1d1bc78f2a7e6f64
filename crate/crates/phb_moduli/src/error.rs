use hypoly_combinatorics::{CombinatoricsError, IndexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhbError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("invalid parabolic weights: {0}")]
    InvalidWeights(String),
    #[error("weights are not generic: ε_{set}(α) + d = 2·{d0}")]
    NonGenericWeights { set: IndexSet, d0: i64 },
    #[error("only genus 0 is supported here, got {0}")]
    UnsupportedGenus(u32),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, PhbError>;
