use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid braid word: {0}")]
    InvalidWord(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("substitution is not a Laurent value: {0}")]
    NotLaurent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("missing corner value {0:?}")]
    MissingCorner(Vec<u8>),

    #[error("refused: {0}")]
    Refused(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
