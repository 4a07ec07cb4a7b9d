use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point set of size {size} exceeds the {what} cap of {cap}")]
    CapExceeded {
        size: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("order type check failed for {label}: {detail}")]
    OrderType { label: String, detail: String },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("free point counts differ: {upper} above, {lower} below")]
    UnequalFreeCounts { upper: usize, lower: usize },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
