//! Command-line front end for `lrp-core`: classification runs, the published
//! tables as CSV, invariant suites, and a few fixture reports.

pub mod app;
pub mod record;
pub mod suites;
pub mod tables;

use std::path::PathBuf;

use thiserror::Error;

pub use app::run;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] lrp_core::Error),
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Output(_) => exit::IO,
            CliError::Json { .. } | CliError::Usage(_) => exit::USAGE,
            CliError::Core(_) | CliError::Inconsistent(_) => exit::VERIFY_FAILED,
        }
    }
}
