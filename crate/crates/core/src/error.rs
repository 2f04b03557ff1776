use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid range: n_min {n_min} exceeds n_max {n_max}")]
    InvalidRange { n_min: usize, n_max: usize },

    #[error("{what} at index {index} is not an integer: {value}")]
    NonIntegral {
        what: &'static str,
        index: usize,
        value: String,
    },

    #[error("cannot parse {input:?} as a rational: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
