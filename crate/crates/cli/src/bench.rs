//! `equisplit bench`: recognizer timings on family members.

use std::time::Duration;

use clap::ValueEnum;
use equisplit_core::bench::{spread, time_recognize, BenchRow};
use equisplit_core::{FamilySpec, Graph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchFamily {
    /// Complete graphs.
    I,
    /// Stars.
    Ii,
    /// Clique side of about sqrt(n) vertices, the rest pendants.
    Iii,
    /// Clique side of about sqrt(n) vertices, the rest pendants on x.
    Iv,
    /// Clique on n - 2 vertices that x and y both see (n odd).
    V,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Family to instantiate at each size.
    #[arg(long, value_enum)]
    family: BenchFamily,
    /// Comma-separated vertex counts; none gives an empty table.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    sizes: Vec<usize>,
    /// Minimum duration of one timed batch, in milliseconds.
    #[arg(long, default_value_t = 100)]
    batch_ms: u64,
    /// Batches per size; the fastest is reported.
    #[arg(long, default_value_t = 5)]
    rounds: usize,
    /// Print the table as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Serialize)]
struct Table {
    rows: Vec<BenchRow>,
    /// Largest over smallest time per (n + m).
    spread: f64,
}

pub fn run(args: &Args) -> Result<u8, String> {
    let graphs = args
        .sizes
        .iter()
        .map(|&n| instance(args.family, n))
        .collect::<Result<Vec<_>, String>>()?;
    let batch = Duration::from_millis(args.batch_ms);
    let rows: Vec<BenchRow> = graphs
        .iter()
        .map(|g| time_recognize(g, batch, args.rounds))
        .collect();
    let table = Table {
        spread: spread(&rows),
        rows,
    };
    if args.json {
        let text =
            serde_json::to_string(&table).map_err(|e| format!("cannot serialize table: {e}"))?;
        println!("{text}");
    } else {
        print_table(&table);
    }
    Ok(0)
}

/// Clique side for the pendant families: the even part of round(sqrt(n)),
/// at least 4, so that m stays proportional to n.
fn pendant_clique(n: usize) -> usize {
    let c = (n as f64).sqrt().round() as usize;
    (c - c % 2).max(4)
}

fn instance(family: BenchFamily, n: usize) -> Result<Graph, String> {
    let spec = match family {
        BenchFamily::I => FamilySpec::I { n },
        BenchFamily::Ii => FamilySpec::Ii { n },
        BenchFamily::Iii => FamilySpec::Iii {
            n,
            r: n.saturating_sub(pendant_clique(n)),
        },
        BenchFamily::Iv => FamilySpec::Iv {
            n,
            r: n.saturating_sub(pendant_clique(n)),
        },
        BenchFamily::V => FamilySpec::V {
            n,
            a: n.saturating_sub(2),
            b: 0,
            c: 0,
        },
    };
    spec.generate().map_err(|e| format!("size {n}: {e}"))
}

fn print_table(table: &Table) {
    println!(
        "{:>10} {:>12} {:>10} {:>14} {:>12}",
        "n", "m", "calls", "ns/call", "ns/(n+m)"
    );
    for r in &table.rows {
        println!(
            "{:>10} {:>12} {:>10} {:>14.1} {:>12.4}",
            r.n, r.m, r.calls, r.nanos_per_call, r.nanos_per_unit
        );
    }
    if table.rows.len() >= 2 {
        println!("spread: {:.2}x", table.spread);
    }
}
