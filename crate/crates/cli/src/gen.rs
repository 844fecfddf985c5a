//! `equisplit gen`: family members and random graphs in edge-list format.

use clap::ValueEnum;
use equisplit_core::{gen_random_graph, gen_random_split, mutate_edge, FamilySpec, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Complete graph K_n (needs --n).
    I,
    /// Star K_{1,n-1} (needs --n).
    Ii,
    /// Universal vertex carrying r pendants, rest a clique (needs --n, --r).
    Iii,
    /// Pendants on x, y seeing the clique minus x (needs --n, --r).
    Iv,
    /// Odd clique plus two outside vertices (needs --n, --a, --b, --c).
    V,
    /// Seeded G(n, p) (needs --n, --p).
    Random,
    /// Seeded random split graph (needs --n, --clique, --p).
    RandomSplit,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Which graph to build.
    #[arg(value_enum)]
    family: Family,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Number of pendant vertices (families iii and iv).
    #[arg(long)]
    r: Option<usize>,
    /// Clique vertices adjacent to both x and y (family v).
    #[arg(long)]
    a: Option<usize>,
    /// Clique vertices adjacent to y only (family v).
    #[arg(long)]
    b: Option<usize>,
    /// Clique vertices adjacent to x only (family v).
    #[arg(long)]
    c: Option<usize>,
    /// Edge probability (random) or clique/independent attach probability (random-split).
    #[arg(long)]
    p: Option<f64>,
    /// Clique size (random-split).
    #[arg(long)]
    clique: Option<usize>,
    /// Seed for the random families and for --mutate.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Flip one seeded vertex pair of the generated graph.
    #[arg(long)]
    mutate: bool,
    /// Output file; standard output if omitted.
    #[arg(short, long, value_name = "PATH")]
    out: Option<String>,
}

pub fn run(args: &Args) -> Result<u8, String> {
    let mut g = generate(args)?;
    if args.mutate {
        g = mutate_edge(&g, args.seed).map_err(|e| e.to_string())?;
    }
    let text = g.to_edge_list();
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{path}: {e}"))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn generate(args: &Args) -> Result<Graph, String> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| format!("family {} needs --{flag}", family_name(args.family)))
    };
    let n = args.n;
    let spec = match args.family {
        Family::I => FamilySpec::I { n },
        Family::Ii => FamilySpec::Ii { n },
        Family::Iii => FamilySpec::Iii {
            n,
            r: need(args.r, "r")?,
        },
        Family::Iv => FamilySpec::Iv {
            n,
            r: need(args.r, "r")?,
        },
        Family::V => FamilySpec::V {
            n,
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            c: need(args.c, "c")?,
        },
        Family::Random => {
            let p = args.p.ok_or("family random needs --p")?;
            return gen_random_graph(n, p, args.seed).map_err(|e| e.to_string());
        }
        Family::RandomSplit => {
            let p = args.p.ok_or("family random-split needs --p")?;
            let clique = need(args.clique, "clique")?;
            return gen_random_split(n, clique, p, args.seed).map_err(|e| e.to_string());
        }
    };
    spec.generate().map_err(|e| e.to_string())
}

fn family_name(family: Family) -> String {
    family
        .to_possible_value()
        .map_or_else(String::new, |v| v.get_name().to_string())
}
