use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the command-line tool, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("numeric error: {0}")]
    Numeric(#[source] qvn_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("time grids differ: {0}")]
    GridMismatch(String),

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::GridMismatch(_) | CliError::Parse { .. } => 1,
            CliError::Numeric(_) => 2,
            CliError::Io { .. } => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<qvn_core::Error> for CliError {
    fn from(e: qvn_core::Error) -> Self {
        use qvn_core::Error as E;
        match e {
            E::InvalidParameter { .. }
            | E::Index { .. }
            | E::NegativeTime(_)
            | E::NonIncreasingTimes { .. }
            | E::StepSize(_)
            | E::Truncation { .. } => CliError::Validation(e.to_string()),
            other => CliError::Numeric(other),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
