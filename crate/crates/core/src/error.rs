use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parts sum to {sum}, expected {expected}")]
    SumMismatch { sum: u128, expected: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("not a solution: sum of {n}-th powers of {xs:?} differs from {z}^{n}")]
    NotASolution { xs: Vec<u64>, z: u64, n: u32 },

    #[error("checkpoint {path} was written for different parameters (expected fingerprint {expected}, found {found})")]
    FingerprintMismatch {
        path: PathBuf,
        expected: String,
        found: String,
    },

    #[error("checkpoint {path} has format version {found}, this build reads version {expected}")]
    VersionMismatch {
        path: PathBuf,
        expected: u32,
        found: u32,
    },

    #[error("checkpoint {path} is truncated or corrupt: {reason}")]
    CorruptCheckpoint { path: PathBuf, reason: String },

    #[error("malformed record: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
