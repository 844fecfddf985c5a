//! `equisplit check`: recognizer versus oracles over a batch of graphs.

use equisplit_core::crosscheck::{
    run_check, CheckReport, Exhaustive, GraphSource, IsolatedPolicy, Listed, Mutations, RandomBatch,
};
use equisplit_core::{FamilySpec, ORACLE_MAX_N};

use crate::input;

/// Largest `n` accepted by `--all-n`; 2^15 labeled graphs at n = 6.
const MAX_EXHAUSTIVE_N: usize = 6;

#[derive(Debug, clap::Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["paths", "all_n", "random", "mutations"]))]
pub struct Args {
    /// Graph files in edge-list format; `-` reads standard input.
    #[arg(value_name = "PATH")]
    paths: Vec<String>,
    /// Every labeled graph on this many vertices (1 to 6).
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u8).range(1..=MAX_EXHAUSTIVE_N as i64))]
    all_n: Option<u8>,
    /// A seeded batch of random graphs and random split graphs.
    #[arg(long)]
    random: bool,
    /// A seeded batch of single-pair mutations of family members.
    #[arg(long)]
    mutations: bool,
    /// Seed for --random and --mutations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs for --random and --mutations.
    #[arg(long, default_value_t = 1_000)]
    count: u64,
    /// Smallest vertex count for --random.
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    /// Largest vertex count for --random, and largest family size for --mutations.
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    /// Evaluate graphs with isolated vertices on their other vertices instead of skipping them.
    #[arg(long)]
    strip_isolated: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

pub fn run(args: &Args) -> Result<u8, String> {
    let source = build_source(args)?;
    let policy = if args.strip_isolated {
        IsolatedPolicy::Strip
    } else {
        IsolatedPolicy::Skip
    };
    let report =
        run_check(source.as_ref(), policy, args.threads.into()).map_err(|e| e.to_string())?;
    if args.json {
        let text =
            serde_json::to_string(&report).map_err(|e| format!("cannot serialize report: {e}"))?;
        println!("{text}");
    } else {
        print_summary(&report);
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn build_source(args: &Args) -> Result<Box<dyn GraphSource>, String> {
    if let Some(n) = args.all_n {
        return Ok(Box::new(Exhaustive { n: n.into() }));
    }
    if args.random {
        if args.min_n == 0 || args.min_n > args.max_n || args.max_n > ORACLE_MAX_N {
            return Err(format!(
                "--random needs 1 <= --min-n <= --max-n <= {ORACLE_MAX_N}, got {}..={}",
                args.min_n, args.max_n
            ));
        }
        return Ok(Box::new(RandomBatch {
            seed: args.seed,
            count: args.count,
            min_n: args.min_n,
            max_n: args.max_n,
        }));
    }
    if args.mutations {
        let families = FamilySpec::all_up_to(args.max_n.min(ORACLE_MAX_N));
        if families.is_empty() {
            return Err(format!(
                "--mutations needs --max-n >= 4, got {}",
                args.max_n
            ));
        }
        return Ok(Box::new(Mutations {
            families,
            seed: args.seed,
            count: args.count,
        }));
    }
    let graphs = args
        .paths
        .iter()
        .map(|path| {
            let g = input::parse(path, &input::read_text(path)?)?;
            if g.n() == 0 {
                return Err(format!(
                    "{}: graph has no vertices",
                    input::display_name(path)
                ));
            }
            if g.n() > ORACLE_MAX_N {
                return Err(format!(
                    "{}: the oracles handle at most {ORACLE_MAX_N} vertices, got {}",
                    input::display_name(path),
                    g.n()
                ));
            }
            Ok(g)
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(Box::new(Listed {
        graphs,
        label: format!("files: {}", args.paths.join(" ")),
    }))
}

fn print_summary(report: &CheckReport) {
    println!("source: {}", report.source);
    println!(
        "graphs: {}, evaluated: {}, skipped (isolated): {}, stripped (isolated): {}",
        report.graphs, report.evaluated, report.skipped_isolated, report.stripped_isolated
    );
    let by_condition = report
        .yes_by_condition
        .iter()
        .map(|(c, k)| format!("{c}={k}"))
        .collect::<Vec<_>>()
        .join(" ");
    println!("yes: {} [{by_condition}]", report.yes);
    println!("disagreements: {}", report.disagreements);
    if let Some(d) = &report.first_disagreement {
        println!(
            "first disagreement: recognize {:?}, oracle split = {}, equimatchable = {:?}",
            d.recognize, d.oracle.split, d.oracle.equimatchable
        );
        print!("{}", d.graph);
    }
}
