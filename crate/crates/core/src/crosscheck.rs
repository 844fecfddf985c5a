//! Batch comparison of the recognizer against the exhaustive oracles.
//!
//! Graphs are produced from an index by a [`GraphSource`], evaluated in
//! parallel, and folded into a [`CheckReport`]. The fold is commutative, and
//! the reported disagreement is the one whose canonical text sorts first, so
//! a report does not depend on the worker count.

use std::collections::BTreeMap;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::generators::{
    gen_random_graph, gen_random_split, labeled_graph, labeled_graph_count, mutate_edge, FamilySpec,
};
use crate::graph::Graph;
use crate::matching::{is_equimatchable_oracle, OracleError, ORACLE_MAX_N};
use crate::recognize::{check_characterization, classify, Condition, RecognizeError, Verdict};
use crate::split::is_split_oracle;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// What to do with graphs that have isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsolatedPolicy {
    /// Count them and leave them out.
    Skip,
    /// Evaluate the graph induced on the non-isolated vertices.
    Strip,
}

/// An indexed family of graphs.
pub trait GraphSource: Sync {
    fn len(&self) -> u64;
    fn graph(&self, index: u64) -> Graph;
    fn describe(&self) -> String;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices.
#[derive(Debug, Clone, Copy)]
pub struct Exhaustive {
    pub n: usize,
}

impl GraphSource for Exhaustive {
    fn len(&self) -> u64 {
        labeled_graph_count(self.n)
    }

    fn graph(&self, index: u64) -> Graph {
        labeled_graph(self.n, index)
    }

    fn describe(&self) -> String {
        format!("all-labeled n={}", self.n)
    }
}

/// Derives an independent stream seed for item `index` of a seeded batch.
pub fn item_seed(seed: u64, index: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeded random graphs with `n` drawn uniformly from `min_n..=max_n`.
/// Even indices are `G(n, p)` with `p` uniform in `[0.1, 0.95]`; odd
/// indices are random split graphs with a random clique size and attach
/// probability, so the batch covers both sides of the YES boundary. A draw
/// with isolated vertices is redrawn from the same stream.
#[derive(Debug, Clone, Copy)]
pub struct RandomBatch {
    pub seed: u64,
    pub count: u64,
    pub min_n: usize,
    pub max_n: usize,
}

impl RandomBatch {
    const MAX_REDRAWS: usize = 64;
}

impl GraphSource for RandomBatch {
    fn len(&self) -> u64 {
        self.count
    }

    fn graph(&self, index: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(item_seed(self.seed, index));
        let mut last = Graph::empty(0);
        for _ in 0..Self::MAX_REDRAWS {
            let n = rng.random_range(self.min_n..=self.max_n);
            let p = rng.random_range(0.1..=0.95);
            let sub_seed = rng.random();
            last = if index.is_multiple_of(2) || n < 2 {
                gen_random_graph(n, p, sub_seed).expect("probability in range")
            } else {
                let clique = rng.random_range(1..n);
                gen_random_split(n, clique, p, sub_seed).expect("parameters in range")
            };
            if last.isolated_vertices().next().is_none() {
                return last;
            }
        }
        last
    }

    fn describe(&self) -> String {
        format!(
            "random seed={} count={} n={}..={}",
            self.seed, self.count, self.min_n, self.max_n
        )
    }
}

/// Single-pair mutations of family members: item `i` flips one pair of
/// family graph `i mod |families|`, seeded per item.
#[derive(Debug, Clone)]
pub struct Mutations {
    pub families: Vec<FamilySpec>,
    pub seed: u64,
    pub count: u64,
}

impl GraphSource for Mutations {
    fn len(&self) -> u64 {
        self.count
    }

    fn graph(&self, index: u64) -> Graph {
        let spec = self.families[(index % self.families.len() as u64) as usize];
        let base = spec.generate().expect("valid family parameters");
        mutate_edge(&base, item_seed(self.seed, index)).expect("family graphs have n >= 2")
    }

    fn describe(&self) -> String {
        format!("mutations seed={} count={}", self.seed, self.count)
    }
}

/// A fixed list of graphs.
#[derive(Debug, Clone)]
pub struct Listed {
    pub graphs: Vec<Graph>,
    pub label: String,
}

impl GraphSource for Listed {
    fn len(&self) -> u64 {
        self.graphs.len() as u64
    }

    fn graph(&self, index: u64) -> Graph {
        self.graphs[index as usize].clone()
    }

    fn describe(&self) -> String {
        self.label.clone()
    }
}

/// Ground truth for one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub split: bool,
    /// Only computed for split graphs.
    pub equimatchable: Option<bool>,
}

impl OracleVerdict {
    pub fn compute(g: &Graph) -> Result<Self, OracleError> {
        let split = is_split_oracle(g)?;
        let equimatchable = if split {
            Some(is_equimatchable_oracle(g)?)
        } else {
            None
        };
        Ok(OracleVerdict {
            split,
            equimatchable,
        })
    }

    pub fn equimatchable_split(&self) -> bool {
        self.split && self.equimatchable == Some(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    /// Canonical edge-list text of the evaluated graph.
    pub graph: String,
    pub recognize: Verdict,
    pub condition: Option<Condition>,
    pub characterization: Option<Condition>,
    pub oracle: OracleVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub source: String,
    pub graphs: u64,
    pub skipped_isolated: u64,
    pub stripped_isolated: u64,
    pub evaluated: u64,
    pub yes: u64,
    pub yes_by_condition: BTreeMap<String, u64>,
    pub disagreements: u64,
    pub first_disagreement: Option<Disagreement>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

#[derive(Debug, Default)]
struct Tally {
    graphs: u64,
    skipped: u64,
    stripped: u64,
    evaluated: u64,
    yes: u64,
    yes_by_condition: BTreeMap<String, u64>,
    disagreements: u64,
    first: Option<Disagreement>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.skipped += other.skipped;
        self.stripped += other.stripped;
        self.evaluated += other.evaluated;
        self.yes += other.yes;
        for (k, v) in other.yes_by_condition {
            *self.yes_by_condition.entry(k).or_default() += v;
        }
        self.disagreements += other.disagreements;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if b.graph < a.graph { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Evaluates one graph and returns `None` if every route agrees, or the
/// disagreement record otherwise. Graphs must be isolated-free, non-empty
/// and within the oracle size limit.
pub fn compare(
    g: &Graph,
) -> Result<(bool, Option<Condition>, Option<Disagreement>), RecognizeError> {
    let result = classify(g)?;
    let oracle = OracleVerdict::compute(g)?;
    let characterization = if g.n() >= 4 {
        check_characterization(g)?.map(|c| c.condition)
    } else {
        None
    };
    let recognized = result.is_yes();
    let mut agree = recognized == oracle.equimatchable_split();
    if g.n() >= 4 {
        agree &= characterization.is_some() == recognized;
    }
    let disagreement = (!agree).then(|| Disagreement {
        graph: g.to_edge_list(),
        recognize: result.verdict,
        condition: result.condition,
        characterization,
        oracle,
    });
    Ok((recognized, result.condition, disagreement))
}

fn evaluate(g: Graph, policy: IsolatedPolicy) -> Tally {
    let mut tally = Tally {
        graphs: 1,
        ..Tally::default()
    };
    let g = if g.isolated_vertices().next().is_some() {
        match policy {
            IsolatedPolicy::Skip => {
                tally.skipped = 1;
                return tally;
            }
            IsolatedPolicy::Strip => {
                tally.stripped = 1;
                let (stripped, _) = g.strip_isolated();
                if stripped.n() == 0 {
                    tally.skipped = 1;
                    return tally;
                }
                stripped
            }
        }
    } else {
        g
    };
    tally.evaluated = 1;
    let (yes, condition, disagreement) =
        compare(&g).expect("graph is isolated-free and within oracle limits");
    if yes {
        tally.yes = 1;
        let key = condition.map_or("small-case".to_string(), |c| c.tag().to_string());
        tally.yes_by_condition.insert(key, 1);
    }
    if let Some(d) = disagreement {
        tally.disagreements = 1;
        tally.first = Some(d);
    }
    tally
}

/// Runs the comparison over every graph of `source` on `threads` workers.
pub fn run_check<S: GraphSource + ?Sized>(
    source: &S,
    policy: IsolatedPolicy,
    threads: usize,
) -> Result<CheckReport, CheckError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| CheckError::ThreadPool(e.to_string()))?;
    let tally = pool.install(|| {
        (0..source.len())
            .into_par_iter()
            .map(|i| source.graph(i))
            .map(|g| {
                if g.n() > ORACLE_MAX_N {
                    Err(CheckError::Oracle(OracleError::TooLarge {
                        n: g.n(),
                        limit: ORACLE_MAX_N,
                    }))
                } else {
                    Ok(evaluate(g, policy))
                }
            })
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })?;
    Ok(CheckReport {
        schema_version: REPORT_SCHEMA_VERSION,
        source: source.describe(),
        graphs: tally.graphs,
        skipped_isolated: tally.skipped,
        stripped_isolated: tally.stripped,
        evaluated: tally.evaluated,
        yes: tally.yes,
        yes_by_condition: tally.yes_by_condition,
        disagreements: tally.disagreements,
        first_disagreement: tally.first,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}
