use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid radix spec: {0}")]
    InvalidSpec(String),
    #[error("coordinates belong to different radix specs")]
    SpecMismatch,
    #[error("cannot parse coordinate {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("invalid weight constraint: {0}")]
    InvalidConstraint(String),
    #[error("space of {size} vertices exceeds the enumeration cap of {cap}")]
    TooLarge { size: String, cap: u128 },
    #[error("decode error: {0}")]
    Decode(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("infeasible fold: collision at bead {0}")]
    Infeasible(usize),
    #[error("statistics of an empty sample")]
    EmptySample,
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
