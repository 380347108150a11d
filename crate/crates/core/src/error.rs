use thiserror::Error;

use crate::rational::Rational;

/// Errors raised by the exact-geometry and index machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Serialized input could not be decoded.
    #[error("parse error: {0}")]
    Parse(String),

    /// Two index routes produced different values.
    #[error("route disagreement: {0}")]
    RouteDisagreement(String),

    /// An intersection index evaluated to something other than a nonnegative integer.
    #[error("index {0} is not a nonnegative integer")]
    NonIntegral(Rational),

    /// A computation reached a state that valid inputs never produce.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
