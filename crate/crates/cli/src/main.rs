//! `equisplit`: recognize equimatchable split graphs, cross-check the fast
//! recognizer against exhaustive oracles, generate family members, and time
//! the recognizer across sizes.

mod bench;
mod check;
mod gen;
mod input;
mod recognize;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exit status for input, parameter and oracle errors.
const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "equisplit",
    version,
    about = "Equimatchable split graph recognition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether each input graph is an equimatchable split graph.
    Recognize(recognize::Args),
    /// Compare the recognizer with the exhaustive oracles on a batch of graphs.
    Check(check::Args),
    /// Write a generated graph in the edge-list format.
    Gen(gen::Args),
    /// Time the recognizer on family members of increasing size.
    Bench(bench::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Recognize(args) => recognize::run(&args),
        Command::Check(args) => check::run(&args),
        Command::Gen(args) => gen::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("equisplit: {message}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
