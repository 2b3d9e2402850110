use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable index {index} outside 1..={vars}")]
    VariableOutOfRange { index: usize, vars: usize },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("rank {rank} unsupported for type {kind}: need at least {min}")]
    UnsupportedRank {
        kind: &'static str,
        rank: usize,
        min: usize,
    },

    #[error("invalid pairing matrix: {0}")]
    InvalidPairing(String),

    #[error("simple reflection index {index} outside 1..={rank}")]
    BadLetter { index: usize, rank: usize },

    #[error("operation {op} unsupported for custom root data")]
    UnsupportedKind { op: &'static str },

    #[error("pairing matrix is not of finite type (more than {limit} positive roots)")]
    NotFiniteType { limit: usize },

    #[error("coordinate {index} is not a constant; supply a numeric assignment")]
    NeedsAssignment { index: usize },

    #[error("rank {rank} exceeds the brute-force guard {guard} (group order about {estimate})")]
    RankGuard {
        rank: usize,
        guard: usize,
        estimate: String,
    },

    #[error("n = {0} is outside the supported regime n >= 5")]
    OutOfRegime(i64),

    #[error("word {word} is not a minimal coset representative")]
    NotMinimal { word: String },

    #[error("highest weight {weight} is not regular dominant")]
    NotRegular { weight: String },
}
