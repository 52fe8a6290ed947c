//! `qhermite` command-line tool.
//!
//! Exit status: 0 on success, 1 when a verification or residual check fails,
//! 2 on usage errors and refused computations.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Outcome};

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (outcome, out) = match &cli.command {
        Command::Table(a) => (commands::table(a)?, &a.output.out),
        Command::Cf(a) => (commands::cf(a)?, &a.output.out),
        Command::Hankel(a) => (commands::hankel(a)?, &a.output.out),
        Command::Oracle(a) => (commands::oracle(a)?, &a.output.out),
        Command::Verify(a) => (commands::verify(a)?, &a.output.out),
        Command::Export(a) => (commands::export(a)?, &a.output.out),
    };
    match out {
        Some(path) => std::fs::write(path, &outcome.body).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth an error
            let _ = stdout.write_all(outcome.body.as_bytes());
        }
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) if o.ok => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
