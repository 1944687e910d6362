pub mod commands;
pub mod config;
pub mod dot;
pub mod report;
pub mod suite;

/// Errors that stop a command before it produces a report; the binary exits
/// with code 2 on all of them.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}
