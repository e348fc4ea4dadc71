//! Library side of the `qtwist` command-line tool: argument definitions,
//! subcommands and the matrix/table emitters.

pub mod commands;
pub mod config;
pub mod emit;

use std::process::ExitCode;

/// Exit status for a failed identity check.
pub const EXIT_FAILURE: u8 = 1;
/// Exit status for an invalid configuration or unreadable input.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl From<qtwist::Error> for CliError {
    fn from(e: qtwist::Error) -> Self {
        match e {
            qtwist::Error::Singular | qtwist::Error::NotMonomial => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_FAILURE,
        })
    }
}

/// Sizes the global worker pool from `QTWIST_THREADS` (default: all cores).
pub fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("QTWIST_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("QTWIST_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Internal(e.to_string()))
}
