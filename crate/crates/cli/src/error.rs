use std::path::PathBuf;

use srd_core::SolveError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// A file that exists but does not parse.
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("solver disagreement: {0}")]
    Disagreement(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Invalid(_) => exit::INVALID_INPUT,
            CliError::Solve(SolveError::Timeout) => exit::UNCERTIFIED,
            CliError::Solve(SolveError::Internal(_)) | CliError::Internal(_) => 1,
            CliError::Solve(_) => exit::INVALID_INPUT,
            CliError::Disagreement(_) => exit::DISAGREEMENT,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 2;
    pub const UNCERTIFIED: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
}
