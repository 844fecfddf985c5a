//! `equisplit recognize`: one verdict per input graph.

use std::time::Instant;

use equisplit_core::{
    classify, find_witness_matchings, split_partition, Condition, Graph, Matching, Reason, Vertex,
    ORACLE_MAX_N,
};
use serde::Serialize;

use crate::input;

/// Version of the JSON object printed per graph. Bump on any field change.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = crate::EXIT_ERROR;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Graph files in edge-list format; `-` reads standard input.
    #[arg(required = true, value_name = "PATH")]
    paths: Vec<String>,
    /// Print one JSON report per graph on stdout; the verdict line moves to stderr.
    #[arg(long)]
    json: bool,
    /// Drop isolated vertices instead of rejecting the graph.
    #[arg(long)]
    strip_isolated: bool,
    /// Exit with 0 for YES, 1 for NO, 2 for any error.
    #[arg(long)]
    exit_verdict: bool,
    /// For NO answers on at most 16 vertices, search for maximal matchings of different sizes.
    #[arg(long)]
    witness: bool,
    /// Leave timings out of the JSON report, making it reproducible byte for byte.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Witness {
    /// Two maximal matchings of different sizes.
    Matchings {
        smaller: Vec<(Vertex, Vertex)>,
        larger: Vec<(Vertex, Vertex)>,
    },
    /// The distinguished `(x, y)` pair of conditions (iv) and (v).
    Pair { x: Vertex, y: Vertex },
}

#[derive(Debug, Serialize)]
struct Timings {
    parse_ns: u128,
    recognize_ns: u128,
}

#[derive(Debug, Serialize)]
struct Report {
    schema_version: u32,
    input: String,
    n: usize,
    m: usize,
    stripped_isolated: usize,
    split: bool,
    equimatchable_split: bool,
    condition: Option<Condition>,
    reason: Option<Reason>,
    witness: Option<Witness>,
    timings: Option<Timings>,
}

#[derive(Debug, Serialize)]
struct ErrorReport<'a> {
    schema_version: u32,
    input: &'a str,
    error: &'a str,
}

pub fn run(args: &Args) -> Result<u8, String> {
    let mut any_error = false;
    let mut any_no = false;
    for path in &args.paths {
        match evaluate(path, args) {
            Ok(report) => {
                any_no |= !report.equimatchable_split;
                emit(&report, args)?;
            }
            Err(message) => {
                any_error = true;
                eprintln!("equisplit: {message}");
                if args.json {
                    let report = ErrorReport {
                        schema_version: REPORT_SCHEMA_VERSION,
                        input: path,
                        error: &message,
                    };
                    println!("{}", to_json(&report)?);
                }
            }
        }
    }
    Ok(if any_error {
        EXIT_ERROR
    } else if args.exit_verdict && any_no {
        EXIT_NO
    } else {
        EXIT_YES
    })
}

fn evaluate(path: &str, args: &Args) -> Result<Report, String> {
    let name = input::display_name(path);
    let text = input::read_text(path)?;

    let start = Instant::now();
    let parsed = input::parse(path, &text)?;
    let parse_ns = start.elapsed().as_nanos();

    // Isolated vertices never meet a matching and never break splitness,
    // so removing them preserves the answer. Vertex ids are mapped back to
    // the input numbering in everything reported.
    let original: Vec<Vertex> = parsed
        .vertices()
        .filter(|&v| parsed.degree(v) > 0)
        .collect();
    let (g, stripped) = if args.strip_isolated {
        parsed.strip_isolated()
    } else {
        if let Some(v) = parsed.isolated_vertices().next() {
            return Err(format!(
                "{name}: vertex {v} is isolated (use --strip-isolated to drop isolated vertices)"
            ));
        }
        (parsed.clone(), 0)
    };
    if g.n() == 0 {
        return Err(format!("{name}: graph has no vertices to evaluate"));
    }
    let to_input = |v: Vertex| original[v - 1];

    let start = Instant::now();
    let result = classify(&g).map_err(|e| format!("{name}: {e}"))?;
    let recognize_ns = start.elapsed().as_nanos();

    let witness = if let Some(p) = result.profile {
        Some(Witness::Pair {
            x: to_input(p.x),
            y: to_input(p.y),
        })
    } else if args.witness && !result.is_yes() && g.n() <= ORACLE_MAX_N {
        find_witness_matchings(&g)
            .map_err(|e| format!("{name}: {e}"))?
            .map(|(smaller, larger)| {
                let relabel = |m: &Matching| -> Vec<(Vertex, Vertex)> {
                    m.edges()
                        .iter()
                        .map(|&(u, v)| (to_input(u), to_input(v)))
                        .collect()
                };
                Witness::Matchings {
                    smaller: relabel(&smaller),
                    larger: relabel(&larger),
                }
            })
    } else {
        None
    };
    if args.witness && !result.is_yes() && g.n() > ORACLE_MAX_N {
        eprintln!(
            "equisplit: {name}: no witness search above {ORACLE_MAX_N} vertices (n = {})",
            g.n()
        );
    }

    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        input: path.to_string(),
        n: parsed.n(),
        m: parsed.m(),
        stripped_isolated: stripped,
        split: is_split(&g),
        equimatchable_split: result.is_yes(),
        condition: result.condition,
        reason: result.reason,
        witness,
        timings: (!args.no_timings).then_some(Timings {
            parse_ns,
            recognize_ns,
        }),
    })
}

fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

fn emit(report: &Report, args: &Args) -> Result<(), String> {
    let mut lines = vec![verdict_line(report)];
    if let Some(w) = &report.witness {
        lines.push(format!("  {}", describe_witness(w)));
    }
    if args.paths.len() > 1 {
        lines[0] = format!("{}: {}", input::display_name(&report.input), lines[0]);
    }
    if args.json {
        for line in &lines {
            eprintln!("{line}");
        }
        println!("{}", to_json(report)?);
    } else {
        for line in &lines {
            println!("{line}");
        }
    }
    Ok(())
}

fn verdict_line(report: &Report) -> String {
    let verdict = if report.equimatchable_split {
        "YES"
    } else {
        "NO"
    };
    match (report.condition, report.reason) {
        (Some(c), _) => format!("{verdict} (condition {c})"),
        (None, Some(r)) => format!("{verdict} (reason: {r})"),
        (None, None) => verdict.to_string(),
    }
}

fn describe_witness(w: &Witness) -> String {
    let edges = |m: &[(Vertex, Vertex)]| {
        m.iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match w {
        Witness::Matchings { smaller, larger } => format!(
            "witness: maximal matchings of sizes {} and {}: [{}] [{}]",
            smaller.len(),
            larger.len(),
            edges(smaller),
            edges(larger)
        ),
        Witness::Pair { x, y } => format!("profile: x = {x}, y = {y}"),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| format!("cannot serialize report: {e}"))
}
