use std::path::PathBuf;

use thiserror::Error;

use crate::config::ConfigError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error(transparent)]
    Compute(#[from] qdm_rf::SweepError),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Process exit status: 1 for bad input, 2 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Schema(_) | CliError::Compute(_) => 1,
            CliError::File { .. } | CliError::Io(_) => 2,
            CliError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(_) => 2,
                _ => 1,
            },
        }
    }
}
