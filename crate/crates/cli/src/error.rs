use std::io;

use regcap_core::ModelError;
use thiserror::Error;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Bad flags, bad values, or malformed input files.
pub const EXIT_USAGE: i32 = 2;
/// Unreadable inputs or unwritable outputs.
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("invalid parameters: {0}")]
    Model(#[from] ModelError),

    #[error("{origin}:{line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Model(_) | CliError::Parse { .. } => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}
