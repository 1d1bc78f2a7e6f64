use hypoly_cohomology::CohomologyError;
use hypoly_combinatorics::CombinatoricsError;
use hypoly_core_geometry::CoreGeometryError;
use hypoly_intersection::IntersectionError;
use hypoly_isom_bridge::IsomError;
use hypoly_phb_moduli::PhbError;
use hypoly_wallcross::WallCrossError;

/// An error with a stable machine-readable code and a process exit status.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{code}: {message}")]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
}

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

impl CliError {
    pub fn input(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), exit: EXIT_INPUT }
    }

    pub fn domain(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), exit: EXIT_DOMAIN }
    }

    pub fn missing(param: &str) -> Self {
        Self::input("MISSING_PARAM", format!("missing required parameter `{param}`"))
    }
}

impl From<CombinatoricsError> for CliError {
    fn from(e: CombinatoricsError) -> Self {
        let code = match e {
            CombinatoricsError::NonGenericWeights { .. } => "NON_GENERIC",
            CombinatoricsError::InvalidWeights(_) => "INVALID_WEIGHTS",
            CombinatoricsError::ParseWeight(_) => "PARSE_ERROR",
            CombinatoricsError::IndexOutOfRange { .. } => "INDEX_OUT_OF_RANGE",
            CombinatoricsError::LengthMismatch { .. } => "LENGTH_MISMATCH",
            CombinatoricsError::TooLarge { .. } => "TOO_LARGE",
        };
        Self::input(code, e.to_string())
    }
}

impl From<IntersectionError> for CliError {
    fn from(e: IntersectionError) -> Self {
        let code = match e {
            IntersectionError::Combinatorics(inner) => return inner.into(),
            IntersectionError::SetNotShort { .. } => "SET_NOT_SHORT",
            IntersectionError::DegreeMismatch { .. } => "DEGREE_MISMATCH",
            IntersectionError::BadShape(_) => "BAD_SHAPE",
            IntersectionError::NonIntegerPairing { .. } => "NON_INTEGER_PAIRING",
            IntersectionError::RecursionShape(_) => "RECURSION_SHAPE",
            IntersectionError::Degenerate(_) => "DEGENERATE",
        };
        Self::domain(code, e.to_string())
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        let code = match e {
            CohomologyError::Combinatorics(inner) => return inner.into(),
            CohomologyError::Intersection(inner) => return inner.into(),
            CohomologyError::SetNotShort { .. } => "SET_NOT_SHORT",
            CohomologyError::TooSmall(_) => return Self::input("TOO_SMALL", e.to_string()),
        };
        Self::domain(code, e.to_string())
    }
}

impl From<CoreGeometryError> for CliError {
    fn from(e: CoreGeometryError) -> Self {
        let code = match e {
            CoreGeometryError::Combinatorics(inner) => return inner.into(),
            CoreGeometryError::Cohomology(inner) => return inner.into(),
            CoreGeometryError::SetNotShort { .. } => "SET_NOT_SHORT",
            CoreGeometryError::SameSet { .. } => "SAME_SET",
            CoreGeometryError::MorseInconsistency(_) => "MORSE_INCONSISTENCY",
            CoreGeometryError::TooSmall(_) => return Self::input("TOO_SMALL", e.to_string()),
        };
        Self::domain(code, e.to_string())
    }
}

impl From<PhbError> for CliError {
    fn from(e: PhbError) -> Self {
        match e {
            PhbError::Combinatorics(inner) => inner.into(),
            PhbError::InvalidWeights(_) => Self::input("INVALID_WEIGHTS", e.to_string()),
            PhbError::NonGenericWeights { .. } => Self::input("NON_GENERIC", e.to_string()),
            PhbError::UnsupportedGenus(_) => Self::domain("UNSUPPORTED_GENUS", e.to_string()),
            PhbError::InvariantViolation(_) => Self::domain("INVARIANT_VIOLATION", e.to_string()),
        }
    }
}

impl From<WallCrossError> for CliError {
    fn from(e: WallCrossError) -> Self {
        match e {
            WallCrossError::Combinatorics(inner) => inner.into(),
            WallCrossError::SameChamber => Self::domain("SAME_CHAMBER", e.to_string()),
            WallCrossError::NotAdjacent { .. } => Self::domain("NOT_ADJACENT", e.to_string()),
            WallCrossError::LengthMismatch(..) => Self::input("LENGTH_MISMATCH", e.to_string()),
        }
    }
}

impl From<IsomError> for CliError {
    fn from(e: IsomError) -> Self {
        let code = match e {
            IsomError::Combinatorics(inner) => return inner.into(),
            IsomError::Phb(inner) => return inner.into(),
            IsomError::LengthMismatch { .. } => return Self::input("LENGTH_MISMATCH", e.to_string()),
            IsomError::ZeroQ { .. } => "ZERO_Q",
            IsomError::NotClosed { .. } => "NOT_CLOSED",
            IsomError::MomentViolation { .. } => "MOMENT_VIOLATION",
            IsomError::UnstablePoint(_) => "UNSTABLE_POINT",
            IsomError::MalformedResidue { .. } => "MALFORMED_RESIDUE",
            IsomError::WeightMismatch => "WEIGHT_MISMATCH",
            IsomError::Sampling(_) => "SAMPLING",
        };
        Self::domain(code, e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::input("PARSE_ERROR", e.to_string())
    }
}
