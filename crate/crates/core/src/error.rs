use thiserror::Error;

/// Errors raised by the arithmetic, parsing and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("digit out of range: {0} (expected {1})")]
    DigitOutOfRange(i64, &'static str),

    #[error("invalid numeral {0:?}")]
    InvalidNumeral(String),

    #[error("segment length must be in 1..={max}, got {got}")]
    SegmentLength { got: usize, max: usize },

    #[error("column sequence has negative value")]
    NegativeValue,

    #[error("cross product sum needs two non-empty sequences of equal length ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("subtraction underflow")]
    Underflow,

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),

    #[error("invalid bench config: {0}")]
    BenchConfig(String),

    #[error("oracle mismatch for {method} on {lhs} x {rhs}: got {got}, expected {expected}")]
    OracleMismatch {
        method: String,
        lhs: String,
        rhs: String,
        got: String,
        expected: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
