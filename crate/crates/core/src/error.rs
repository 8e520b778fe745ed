use thiserror::Error;

/// Errors raised by the library. Every operation that can reject its input
/// returns one of these rather than panicking.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("letter {letter} outside alphabet 1..={k}")]
    InvalidLetter { letter: u32, k: usize },
    #[error("path horizons differ ({left} vs {right})")]
    HorizonMismatch { left: usize, right: usize },
    #[error("path is not in Λ_1: step at time {time} is not 0 or 1")]
    InvalidStep { time: usize },
    #[error("path must start at 0")]
    NonZeroStart,
    #[error("time window [{from}, {to}] is invalid for horizon {horizon}")]
    InvalidWindow { from: usize, to: usize, horizon: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation needs dimension at least {required}, found {found}")]
    DimensionTooSmall { required: usize, found: usize },
    #[error("not a partition: parts must be non-increasing")]
    NotPartition,
    #[error("invalid tableau: {0}")]
    InvalidTableau(&'static str),
    #[error("shape size {shape} differs from weight size {weight}")]
    SizeMismatch { shape: u64, weight: u64 },
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("bialternant denominator vanishes (repeated coordinates)")]
    SingularBialternant,
    #[error("not a probability vector: {0}")]
    NotDistribution(&'static str),
    #[error("state lies outside the state space of this matrix")]
    OutsideStateSpace,
    #[error("invalid growth chain: {0}")]
    InvalidChain(&'static str),
    #[error("conditioning event has probability zero")]
    ZeroProbability,
    #[error("coordinates must be strictly increasing")]
    UnorderedDrift,
    #[error("rates of stations 2 and 3 must coincide")]
    UnequalRates,
    #[error("series truncated after {terms} terms with tail bound {tail:e} above tolerance {tolerance:e}")]
    Truncation { terms: usize, tail: f64, tolerance: f64 },
    #[error("integer overflow")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("piecewise-linear path malformed: {0}")]
    InvalidPiecewisePath(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
