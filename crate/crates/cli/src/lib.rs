//! Command-line front end for the `condinf` engine.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;

use clap::Parser;

pub use args::{Cli, Command, Flags, Format};
pub use error::CliError;

/// Run an already-parsed command line.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let flags = cli.command.flags().clone().resolve()?;
    if let Some(threads) = flags.threads {
        if threads == 0 {
            return Err(error::config("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| error::config(format!("cannot start {threads} threads: {e}")))?;
    }
    commands::dispatch(&cli.command, &flags)
}

/// Parse `std::env::args` and run.
pub fn main_with_args() -> Result<(), CliError> {
    run(Cli::parse())
}
