//! CLI error type mapping onto the process exit codes: usage problems
//! exit 1, runtime failures (unsolvable targets where a result is
//! mandatory, failed validation) exit 2.

use std::fmt;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        CliError::Failure(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failure(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<photon_mux::Error> for CliError {
    fn from(e: photon_mux::Error) -> Self {
        match e {
            photon_mux::Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            photon_mux::Error::NoSolution { .. } | photon_mux::Error::NonMonotoneBracket { .. } => {
                CliError::Failure(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("i/o error: {e}"))
    }
}
