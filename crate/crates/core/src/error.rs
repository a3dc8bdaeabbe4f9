use thiserror::Error;

use crate::triangle::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Both components of a ratio vanished, so no integer pair represents it.
    #[error("degenerate ratio")]
    DegenerateRatio,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid search bound: {0}")]
    InvalidBound(String),

    /// The sextuple does not describe a triangle with integer medians.
    #[error("not a median triangle: {0}")]
    NotAMedianTriangle(VerificationReport),

    /// An identity that holds for every correct input failed. Indicates a bug,
    /// never bad user input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}
