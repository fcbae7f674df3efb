mod args;
mod cache;
mod commands;
mod error;
mod render;
mod tables;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{run_invariant, Job};
use error::{CliResult, EXIT_INPUT, EXIT_INTERNAL};

fn dispatch(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Trace(t) => run_invariant(Job::Trace, &t),
        Command::Alexander(a) => run_invariant(
            Job::Alexander {
                faithful: a.faithful,
            },
            &a.target,
        ),
        Command::Jones(t) => run_invariant(Job::Jones, &t),
        Command::Homfly(t) => run_invariant(Job::Homfly, &t),
        Command::Khovanov(t) => run_invariant(Job::Khovanov, &t),
        Command::Twist(a) => run_invariant(Job::Twist { ks: a.k }, &a.target),
        Command::Bounds(a) => run_invariant(
            Job::Bounds {
                ks: a.k,
                variant: a.variant,
            },
            &a.target,
        ),
        Command::Stats(t) => run_invariant(Job::Stats, &t),
        Command::Table(a) => tables::run_table(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT as u8),
            };
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| dispatch(cli)));
    match outcome {
        Ok(Ok(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_INTERNAL as u8);
            }
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL as u8),
    }
}
