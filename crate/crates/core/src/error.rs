use thiserror::Error;

/// Errors surfaced by the library. Internal convention violations (for example
/// an inexact division that is provably exact when the conventions are right)
/// panic instead: they indicate a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("argument out of range for {what}: got {got}, allowed at most {max}")]
    BoundExceeded {
        what: &'static str,
        got: i64,
        max: i64,
    },

    #[error("negative argument rejected: {0}")]
    NegativeArg(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid area word: {0}")]
    InvalidAreaWord(String),

    #[error("invalid coarea word: {0}")]
    InvalidCoareaWord(String),

    #[error("invalid parking function: {0}")]
    InvalidParkingFunction(String),

    #[error("marks are not removable corners of the path: {0}")]
    InvalidMarks(String),

    #[error("pairs are not forced pairs of the path: {0}")]
    NotForcedPairs(String),

    #[error("label set is not a possible downset: {0}")]
    NotPossibleDownset(String),

    #[error("coefficient is not a polynomial: {0}")]
    RationalCoefficient(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
