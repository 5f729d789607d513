use std::io;
use std::path::PathBuf;

use cds_core::CdsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Cds(#[from] CdsError),
}

impl BenchError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 usage/config, 2 I/O or malformed file, 3 precondition failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Config(_) => 1,
            BenchError::Io { .. } | BenchError::Parse { .. } => 2,
            BenchError::Cds(_) => 3,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
