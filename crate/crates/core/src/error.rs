use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Integer outside the range the factoring routines support (`< 2^127`).
    #[error("value out of supported range: {0}")]
    OutOfRange(String),

    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },

    /// Invalid parameters for an operation (bad group parameters, singular matrix, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown group: {0}")]
    UnknownGroup(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("enumeration cap of {cap} elements exceeded after visiting {visited} elements")]
    CapExceeded { cap: u64, visited: u64 },

    #[error("element order exceeds cap {0}")]
    OrderCapExceeded(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Data that contradicts a known group-theoretic identity.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("missing data file {}", .0.display())]
    MissingData(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by bad user input rather than failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::UnknownGroup(_) | Error::Domain(_) | Error::OutOfRange(_) | Error::Unsupported(_)
        )
    }
}
