use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {index} of point {point} is zero")]
    ZeroWeight { point: usize, index: usize },
    #[error("point {point} has {found} weights, expected {expected}")]
    WeightCount {
        point: usize,
        expected: usize,
        found: usize,
    },
    #[error("fixed-point data must contain at least one point")]
    NoPoints,
    #[error("dimension n must be positive")]
    ZeroDimension,
    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
    #[error("denominator factor z^{0} - 1 must have a positive exponent")]
    InvalidDenominator(i64),
    #[error("expected {expected} fixed points, found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported series division: {0}")]
    UnsupportedDivision(String),
    #[error("proof replay does not apply: {0}")]
    NotApplicable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
