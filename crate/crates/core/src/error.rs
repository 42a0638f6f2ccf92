use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{origin}:{line}: {message}")]
    ZeroParse {
        origin: String,
        line: usize,
        message: String,
    },

    #[error("missing zero list for character {0}")]
    MissingZeros(String),

    #[error("zero list {label} is complete only to T = {complete_to}, requested T = {requested}")]
    BeyondCompleteness {
        label: String,
        complete_to: f64,
        requested: f64,
    },

    #[error("vanishing order undetermined at {0}: all Taylor coefficients up to order 6 below threshold")]
    Undetermined(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: impl AsRef<std::path::Path>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            message: err.to_string(),
        }
    }
}
