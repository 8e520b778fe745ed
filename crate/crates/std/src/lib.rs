//! Command-line front end for `pathrsk-core`: argument parsing, JSON formats
//! and the verification runner.
//!
//! Exit codes: `0` success, `2` invalid input (arguments, files, JSON or
//! values rejected by the library), `3` a requested verification failed.

pub mod app;
pub mod io;

use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] pathrsk_core::Error),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub const INPUT: u8 = 2;
    pub const VERIFICATION: u8 = 3;

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) | CliError::Core(_) => Self::INPUT,
            CliError::Verification(_) => Self::VERIFICATION,
        })
    }
}
