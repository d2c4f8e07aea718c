use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which precondition of the shifting-uniqueness check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessPrecondition {
    ThresholdBelowTwo,
    ShiftImageA,
    ShiftImageB,
    NotCrossIntersecting,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground size {0} unsupported (expected 1..=64)")]
    GroundSize(u32),
    #[error("ground sizes differ: {left} vs {right}")]
    GroundMismatch { left: u32, right: u32 },
    #[error("element {element} outside [1, {n}]")]
    ElementOutOfRange { element: u32, n: u32 },
    #[error("index {index} outside [0, {n}]")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("p = {0} outside the admissible range")]
    Probability(String),
    #[error("empty family")]
    EmptyFamily,
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("size cap exceeded: {0}")]
    Cap(String),
    #[error("structure condition violated: {0}")]
    Structure(String),
    #[error("witness precondition failed: {0:?}")]
    Witness(WitnessPrecondition),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("cannot parse rational `{0}`")]
    ParseRat(String),
}
