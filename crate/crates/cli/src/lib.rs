//! Command-line front end for `spectral-zeta`.
//!
//! Exit codes: 0 success, 1 verification or evaluation failure, 2 coefficient
//! methods disagree, 3 evaluation hit a pole, 64 usage error.

pub mod args;
mod commands;
pub mod complex;
pub mod config;
pub mod output;
mod verify;

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::Parser;

pub use complex::parse_complex;
pub use config::Config;
pub use output::{Format, OutputRecord};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const COEFF_MISMATCH: i32 = 2;
    pub const AT_POLE: i32 = 3;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Internal(_) | CliError::Io(_) => exit::FAILURE,
        }
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return exit::SUCCESS;
                }
                _ => exit::USAGE,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match commands::dispatch(cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
