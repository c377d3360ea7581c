mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use config::{Cli, RunConfig};

/// Anything that stops a command before it can report: exit status 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(selberg_core::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<selberg_core::Error> for CliError {
    fn from(e: selberg_core::Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::resolve(cli.command, cli.flags).and_then(|cfg| commands::run(&cfg));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = commands::hint(&e) {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(2)
        }
    }
}
