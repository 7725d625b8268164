//! Command-line front end and file formats for the `hyperaccel` engine.
//!
//! [`run`] executes a parsed [`args::Cli`] against any writer, so the binary
//! and the tests share one code path.

pub mod args;
pub mod catalog_file;
mod commands;

use std::io::Write;
use std::process::ExitCode;

pub use commands::run_with;

/// Environment variable that overrides the default term cap.
pub const MAX_TERMS_VAR: &str = "HYPERACCEL_MAX_TERMS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] hyperaccel::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("catalog line {line}: {msg}")]
    Format { line: usize, msg: String },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            _ => ExitCode::from(1),
        }
    }
}

/// Whether every check a command ran passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::Pass => ExitCode::SUCCESS,
            Status::Fail => ExitCode::from(1),
        }
    }
}

/// Options that come from the environment rather than flags.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub max_terms: Option<usize>,
}

impl Settings {
    /// Reads the term cap from a raw variable value.
    pub fn from_var(value: Option<&str>) -> Result<Self, CliError> {
        let max_terms = value
            .map(|v| {
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("{MAX_TERMS_VAR} must be an integer, got `{v}`")))
            })
            .transpose()?;
        Ok(Self { max_terms })
    }

    pub fn from_env() -> Result<Self, CliError> {
        Self::from_var(std::env::var(MAX_TERMS_VAR).ok().as_deref())
    }
}

/// Runs with settings taken from the environment.
pub fn run(cli: &args::Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    run_with(cli, &Settings::from_env()?, out)
}
