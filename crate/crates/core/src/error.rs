use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("T-table line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error("duplicate T-table entry for canonical key {0}")]
    DuplicateKey(String),

    #[error("search too large: {0}")]
    Guard(String),

    #[error("malformed certificate: {0}")]
    CertificateFormat(String),

    #[error("certificate rejected: {0}")]
    CertificateInvalid(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }
}
