use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-invertible series: constant coefficient is zero")]
    NonInvertible,
    #[error("q-Pochhammer offset must be at least 1")]
    ZeroOffset,
    #[error("q-Pochhammer step must be at least 1")]
    ZeroStep,
    #[error("divisor sum is undefined for n = 0")]
    ZeroArgument,
    #[error("unsupported Eisenstein weight {0}; expected 2, 4 or 6")]
    UnsupportedWeight(u32),
    #[error("weight bound {0} is odd")]
    OddWeightBound(u32),
    #[error("index k = {k} exceeds n = {n}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
