use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] fh_diagram::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{source}")]
    Write { source: std::io::Error },
    #[error("{path}: row {row}: {msg}")]
    Parse {
        path: PathBuf,
        row: usize,
        msg: String,
    },
    #[error("{0} inequality violation(s) found")]
    Violations(usize),
}

impl CliError {
    /// 0 success, 1 violation found, 2 usage or domain error, 3 I/O or parse error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violations(_) => 1,
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io { .. } | CliError::Write { .. } | CliError::Parse { .. } => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(source: std::io::Error) -> Self {
        CliError::Write { source }
    }
}

pub type CliResult<T> = Result<T, CliError>;
