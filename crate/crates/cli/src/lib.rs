//! Command-line front end for `graphene-cs`.
//!
//! Grid commands write CSV (or JSON with a metadata envelope) with rows in
//! request order; `verify` writes the invariant report as JSON.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 invalid request,
//! 3 numerical non-convergence.

pub mod args;
pub mod commands;
pub mod error;
pub mod parse;
pub mod table;

use std::io::Write;

pub use args::Cli;
pub use commands::Outcome;
pub use error::CliError;

use args::Command;
use commands::{grid_outcome, run_coeffs, run_density, run_energy, run_uncertainty, run_verify};

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Uncertainty(a) => grid_outcome(run_uncertainty(a), &a.out),
        Command::Energy(a) => grid_outcome(run_energy(a), &a.out),
        Command::Coeffs(a) => grid_outcome(run_coeffs(a), &a.out),
        Command::Density(a) => grid_outcome(run_density(a), &a.out),
        Command::Verify(a) => run_verify(a),
    }
}

fn output_path(cli: &Cli) -> Option<&std::path::Path> {
    match &cli.command {
        Command::Uncertainty(a) | Command::Energy(a) | Command::Coeffs(a) => {
            a.out.output.as_deref()
        }
        Command::Density(a) => a.out.output.as_deref(),
        Command::Verify(a) => a.out.output.as_deref(),
    }
}

fn emit(cli: &Cli, bytes: &[u8]) -> std::io::Result<()> {
    match output_path(cli) {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()
        }
    }
}

/// Runs a parsed command, writing output and diagnostics; returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(outcome) => {
            for d in &outcome.diagnostics {
                eprintln!("{}: {d}", cli.command.name());
            }
            if let Err(e) = emit(cli, &outcome.bytes) {
                eprintln!("{}: {}", cli.command.name(), CliError::Io(e));
                return error::EXIT_INVALID;
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("{}: {e}", cli.command.name());
            e.exit_code()
        }
    }
}
