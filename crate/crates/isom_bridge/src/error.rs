use hypoly_combinatorics::CombinatoricsError;
use hypoly_phb_moduli::PhbError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IsomError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Phb(#[from] PhbError),
    #[error("q_{index} vanishes")]
    ZeroQ { index: usize },
    #[error("edge vectors do not close: |Σv| = {gap:e}")]
    NotClosed { gap: f64 },
    #[error("moment map violated: real residual {real:e}, complex residual {complex:e}")]
    MomentViolation { real: f64, complex: f64 },
    #[error("point is not stable: {0}")]
    UnstablePoint(String),
    #[error("residue {index} is malformed: {reason}")]
    MalformedResidue { index: usize, reason: String },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weights and parabolic weights lie in different chambers")]
    WeightMismatch,
    #[error("cannot sample: {0}")]
    Sampling(String),
}

pub type Result<T> = std::result::Result<T, IsomError>;
