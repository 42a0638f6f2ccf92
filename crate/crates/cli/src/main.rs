//! `eulerlab` command-line front end.
//!
//! Exit codes: 0 ok, 2 configuration error, 3 missing or insufficient zero
//! fixtures, 4 acceptance failure.

mod args;
mod commands;
mod config;
mod table;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    MissingFixture(String),
    #[error("{0}")]
    Acceptance(String),
    #[error("cannot write {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Output { .. } => 2,
            CliError::MissingFixture(_) => 3,
            CliError::Acceptance(_) => 4,
        }
    }
}

impl From<eulerlab::Error> for CliError {
    fn from(e: eulerlab::Error) -> Self {
        use eulerlab::Error as E;
        match e {
            E::MissingZeros(_) | E::ZeroParse { .. } | E::BeyondCompleteness { .. } | E::Io { .. } => {
                CliError::MissingFixture(e.to_string())
            }
            other => CliError::Config(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("eulerlab: {e}");
            ExitCode::from(e.code())
        }
    }
}
