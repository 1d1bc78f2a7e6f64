use hypoly_cohomology::CohomologyError;
use hypoly_combinatorics::{CombinatoricsError, IndexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreGeometryError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("{set} is not a short set of cardinality at least 2")]
    SetNotShort { set: IndexSet },
    #[error("core intersection needs two distinct sets, got {set} twice")]
    SameSet { set: IndexSet },
    #[error("Morse decomposition is inconsistent: {0}")]
    MorseInconsistency(String),
    #[error("n = {0} is below the supported minimum 4")]
    TooSmall(usize),
}

pub type Result<T> = std::result::Result<T, CoreGeometryError>;
