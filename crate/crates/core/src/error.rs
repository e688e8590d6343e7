use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("support is empty")]
    EmptySupport,
    #[error("support is not convenient: no point on coordinate axis {axis}")]
    NotConvenient { axis: usize },
    #[error("negative coordinate in {0:?}")]
    NegativeCoordinate(Vec<i64>),
    #[error("point {point:?} has {got} coordinates, expected {expected}")]
    DimensionMismatch {
        point: Vec<i64>,
        expected: usize,
        got: usize,
    },
    #[error("the origin cannot be part of the support")]
    OriginInSupport,
    #[error("{0} variables requested; supported range is 1..=4")]
    UnsupportedDimension(usize),
    #[error("support has {0} points; at most 128 are supported")]
    TooManyPoints(usize),
    #[error("scale factor must be at least 1")]
    InvalidScale,
    #[error("face sum did not cancel: {0}")]
    InternalCancellationFailure(String),
    #[error("Milnor number is not an integer: {0}")]
    NonIntegerResult(String),
    #[error("invalid characteristic sequence: {0}")]
    InvalidCharSequence(String),
    #[error("operation needs a single Puiseux pair, got g = {0}")]
    NotSinglePair(usize),
    #[error("argument {value} outside [{lo}, {hi}]")]
    OutOfDomain {
        value: String,
        lo: String,
        hi: String,
    },
    #[error("pole: w*t = {0} is an integer")]
    PoleAtArgument(f64),
    #[error("parse error: {0}")]
    Parse(String),
}
