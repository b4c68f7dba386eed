use thiserror::Error;

pub type Result<T> = core::result::Result<T, QpaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QpaError {
    #[error("amplitudes must be finite")]
    NonFinite,
    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("measurement branch has probability {probability}, cannot collapse onto it")]
    DegenerateBranch { probability: f64 },
    #[error("mixture weights must be non-negative and sum to 1 (sum {sum})")]
    InvalidWeights { sum: f64 },
    #[error("cascade group is empty")]
    EmptyGroup,
    #[error("randomness stream ran out")]
    RandomnessExhausted,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("check sample is empty after rounding")]
    EmptySample,
    #[error("no published check result was measured in the preparation basis")]
    NoMatchingBasis,
    #[error("need at least {needed} qubits, only {available} remain")]
    InsufficientQubits { needed: usize, available: usize },
    #[error("message has {message} bits but only {capacity} condensed qubits are available")]
    Capacity { message: usize, capacity: usize },
    #[error("no finite group size reaches the target when r = 1")]
    NoFiniteGroupSize,
}
