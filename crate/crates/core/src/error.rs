use thiserror::Error;

/// Errors raised by the numerical core.
///
/// Payload values are reported as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("q-exponential pole: base 1+(1-q)x vanishes with negative exponent 1/(1-q) = {exponent}")]
    Pole { exponent: f64 },

    #[error("q-exponential branch cut: base {base} lies on the negative real axis and the exponent {exponent} is not an integer")]
    BranchCut { base: f64, exponent: f64 },

    #[error("index {index} out of range for dimension {dim}")]
    Index { index: usize, dim: usize },

    #[error("truncation at dim = {dim} loses probability mass {tail:e}; at least dim = {required} is needed")]
    Truncation { dim: usize, tail: f64, required: usize },

    #[error("matrix is not Hermitian: max |A - A^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is empty")]
    Empty,

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("trace is {trace}, expected 1")]
    TraceNotUnit { trace: f64 },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("time must be nonnegative and finite, got {0}")]
    NegativeTime(f64),

    #[error("times must be strictly increasing (index {index})")]
    NonIncreasingTimes { index: usize },

    #[error("step size must be positive, got {0}")]
    StepSize(f64),

    #[error("validity horizon diverges for q = 1 (unitary limit)")]
    DivergentHorizon,

    #[error("Laguerre degree {0} exceeds the supported maximum of 1000000")]
    DegreeTooLarge(u64),

    #[error("numeric overflow: {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
