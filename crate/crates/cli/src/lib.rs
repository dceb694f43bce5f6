//! Command-line front end for `gzeta-core`: graph specs and files, value
//! ranges, CSV/JSON output and the subcommand handlers.

pub mod commands;
pub mod graph_file;
pub mod output;
pub mod range;
pub mod spec;

use gzeta_core::ErrorKind;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(#[from] gzeta_core::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// Process exit code: 2 usage, 3 domain, 4 resource.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Domain => 3,
                ErrorKind::Resource => 4,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
