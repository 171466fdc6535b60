use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and arrangement operations.
///
/// `Precondition` covers everything a caller can provoke with legal but
/// unsuitable inputs (wrong parameter for a built-in, non-reflective
/// arrangement, ...). The CLI maps it to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("scalar kind mismatch: {0}")]
    ScalarMismatch(String),

    #[error("proportional wall vectors {0} and {1} describe the same wall")]
    ProportionalWalls(String, String),

    #[error("not a reflective arrangement at this parameter: walls {0}, {1} meet at an unrecognized angle")]
    NotReflective(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown wall label {0}")]
    UnknownLabel(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
