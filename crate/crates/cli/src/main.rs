//! `loghankel` command-line front end.
//!
//! Exit status: 0 when every checked gap or residual is within tolerance,
//! 1 on a verification failure, 2 on usage, range or I/O errors.

mod args;
mod commands;
mod complex;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: &Cli) -> commands::CmdResult {
    match &cli.command {
        Command::Verify { family, grid, tol } => commands::verify(family, grid, *tol),
        Command::Sweep {
            family,
            values,
            beta,
            grid,
            tol,
        } => commands::sweep_cmd(*family, values, *beta, grid, *tol),
        Command::YmaxCertify {
            n,
            seed,
            tol,
            inject,
        } => commands::ymax_certify(*n, *seed, *tol, inject),
        Command::Extremal { family, tol } => commands::extremal(family, *tol),
        Command::Gamma { source, tol } => commands::gamma(source, *tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(report) => report,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = match report.render(cli.format) {
        Ok(text) => text,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
