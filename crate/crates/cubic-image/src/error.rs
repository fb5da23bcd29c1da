use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Extension degree outside the supported 1..=32 window.
    #[error("extension degree {0} out of range (supported: 1..=32)")]
    Range(u32),

    /// A supplied modulus is not an irreducible polynomial of the right degree.
    #[error("invalid modulus 0x{modulus:x}: {reason}")]
    Modulus { modulus: u64, reason: &'static str },

    #[error("division by zero")]
    DivisionByZero,

    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Operands that cannot be combined, e.g. extension elements over
    /// different moduli.
    #[error("usage error: {0}")]
    Usage(String),

    /// An exhaustive scan was requested beyond the documented bound.
    #[error("brute force infeasible for n = {n} (bound: n <= {bound})")]
    Feasibility { n: u32, bound: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
