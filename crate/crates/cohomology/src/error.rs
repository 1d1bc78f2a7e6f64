use hypoly_combinatorics::{CombinatoricsError, IndexSet};
use hypoly_intersection::IntersectionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Intersection(#[from] IntersectionError),
    #[error("{set} is not a short set of cardinality at least 2")]
    SetNotShort { set: IndexSet },
    #[error("ring presentations need n ≥ 4, got {0}")]
    TooSmall(usize),
}

pub type Result<T> = std::result::Result<T, CohomologyError>;
