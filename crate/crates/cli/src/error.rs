use std::io;

use hyperpa::analysis::{FitError, HistogramError, OracleError};
use hyperpa::generator::GeneratorError;
use hyperpa::io::IoError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Histogram(#[from] HistogramError),
    #[error("{path}: {source}")]
    Input { path: String, source: IoError },
    #[error("{path}: {source}")]
    Output { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_)
            | CliError::Generator(_)
            | CliError::Oracle(_)
            | CliError::Fit(_)
            | CliError::Histogram(_) => 2,
            CliError::Input { .. } | CliError::Output { .. } => 1,
        }
    }
}
