mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "minecc", version, about = "Minimum edge-colored clustering solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print a report.
    Solve(commands::SolveArgs),
    /// Print size statistics and LP constraint counts.
    Stats(commands::StatsArgs),
    /// Check a solve report against its instance.
    Verify(commands::VerifyArgs),
    /// Write a random instance in canonical format.
    Gen(commands::GenArgs),
    /// Time several algorithms over several instances.
    Bench(bench::BenchArgs),
}

/// Process exit codes.
pub mod exit {
    pub const FAILURE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const GUARD: u8 = 3;
}

pub(crate) fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), commands::CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| commands::CliError::input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => commands::solve(args),
        Command::Stats(args) => commands::stats(args),
        Command::Verify(args) => commands::verify(args),
        Command::Gen(args) => commands::generate(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
