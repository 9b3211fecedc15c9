use thiserror::Error;

use crate::arith::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Parameters fail the rank-one basis hypothesis; the message names the failed condition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid c-matrix index ({0}, {1}): indices must be distinct and in 1..=3")]
    InvalidIndex(usize, usize),

    #[error("degenerate basis: the antisymmetrized sum vanishes on the calibration triple")]
    DegenerateBasis,

    #[error("bad calibration: g(c1, c2, c3) = {0}, expected 1")]
    BadCalibration(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("algorithm does not multiply 2x2 matrices correctly ({0} basis-pair failures)")]
    UnverifiedAlgorithm(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
