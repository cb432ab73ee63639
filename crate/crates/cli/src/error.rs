use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::report::ExitStatus;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] fermatlab_core::Error),

    #[error("cannot write {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("cannot write output: {0}")]
    Stdout(io::Error),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Core(_) => ExitStatus::Usage,
            CliError::Io { .. } | CliError::Stdout(_) => ExitStatus::Io,
        }
    }
}
