//! Command-line front end for `hardness-core`: CSV ingestion, JSON reports
//! and SVG polar charts.

use std::path::PathBuf;

pub mod input;
pub mod parallel;
pub mod report;
pub mod svg;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input or arguments.
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// A measure could not be computed on otherwise valid data.
    #[error(transparent)]
    Measure(hardness_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Measure(_) => 3,
        }
    }
}

impl From<hardness_core::Error> for CliError {
    fn from(e: hardness_core::Error) -> Self {
        match e {
            e @ hardness_core::Error::Measure { .. } => CliError::Measure(e),
            e => CliError::Invalid(e.to_string()),
        }
    }
}
