use std::fmt;

use crate::rounding::RoundingAbort;

/// Everything that can go wrong inside the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-range input data.
    #[error("invalid input: {0}")]
    Input(String),
    /// A documented precondition of an operation does not hold.
    #[error("contract violated: {0}")]
    Contract(String),
    /// An exact search hit one of its configured limits.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// The rounding loop refused to continue; carries the full state.
    #[error("rounding aborted: {0}")]
    Rounding(Box<RoundingAbort>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl fmt::Display) -> Self {
        Error::Input(msg.to_string())
    }

    pub(crate) fn contract(msg: impl fmt::Display) -> Self {
        Error::Contract(msg.to_string())
    }

    pub(crate) fn budget(msg: impl fmt::Display) -> Self {
        Error::Budget(msg.to_string())
    }
}
