use thiserror::Error;

/// Errors produced by configuration validation, parsing and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("experiment spec error: {0}")]
    InvalidSpec(String),
    #[error("missing results: {0}")]
    MissingResults(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
