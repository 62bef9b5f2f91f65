//! Error type shared across the crate.

use std::path::PathBuf;

/// Crate-wide error enum. The CLI maps variants onto process exit codes:
/// validation failures exit 1, configuration errors exit 2, I/O errors
/// exit 3 (success is 0).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter, flag, or config-file value is out of its documented
    /// domain, or the file could not be parsed.
    #[error("config: {0}")]
    Config(String),

    /// An ensemble report missed one or more validation expectations.
    #[error("validation: {0}")]
    Validation(String),

    /// Filesystem failure while reading inputs or writing outputs.
    #[error("i/o on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An operation was handed data it cannot define a result for
    /// (empty tap list, zero total power, outage channel).
    #[error("empty input: {0}")]
    Empty(&'static str),
}

impl Error {
    /// Builds a [`Error::Config`] from anything displayable.
    pub fn config(msg: impl std::fmt::Display) -> Self {
        Error::Config(msg.to_string())
    }

    /// Attaches a path to an I/O failure.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Config(_) | Error::Empty(_) => 2,
            Error::Io { .. } => 3,
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
