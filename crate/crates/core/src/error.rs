use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A required key is absent from a constants file.
    #[error("configuration error: missing required key `{key}`")]
    MissingKey { key: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("format error at line {line}, column {column}: {message}")]
    Format {
        line: usize,
        column: usize,
        message: String,
    },

    /// The requested evaluation exceeds what the implementation supports.
    #[error("capability error: {0}")]
    Capability(String),

    /// A numeric oracle could not resolve the requested quantity.
    #[error("oracle resolution error: {0}")]
    OracleResolution(String),

    #[error("i/o error on `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MissingKey { .. } => "configuration",
            Error::Validation(_) => "validation",
            Error::Format { .. } => "format",
            Error::Capability(_) => "capability",
            Error::OracleResolution(_) => "oracle_resolution",
            Error::Io { .. } => "io",
        }
    }
}
