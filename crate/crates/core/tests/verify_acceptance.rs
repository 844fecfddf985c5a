//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p equisplit-core --test verify_acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use equisplit_core::bench::{spread, time_recognize, BenchRow};
use equisplit_core::crosscheck::{
    run_check, CheckReport, Exhaustive, IsolatedPolicy, Mutations, RandomBatch,
};
use equisplit_core::{
    check_characterization, classify, find_witness_matchings, gen_complete, gen_family_iii,
    maximal_matching_sizes, recognize, Condition, FamilySpec, Graph, Matching,
};
use rayon::prelude::*;
use serde::Serialize;

const EXHAUSTIVE_N: usize = 6;
const EXHAUSTIVE_GRAPHS: u64 = 32_768;
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(120);

const RANDOM_SEED: u64 = 0x5EED_2024;
const RANDOM_COUNT: u64 = 100_000;
const RANDOM_N: (usize, usize) = (7, 12);
const RANDOM_BUDGET: Duration = Duration::from_secs(300);

const GENERATOR_MAX_N: usize = 12;
const LEMMA_MAX_N: usize = 7;

const FAMILY_III_SIZES: [usize; 4] = [1_000, 10_000, 100_000, 1_000_000];
const FAMILY_I_SIZES: [usize; 3] = [500, 1_000, 2_000];
const MAX_SPREAD: f64 = 3.0;
const K2000_BUDGET: Duration = Duration::from_secs(1);

const MUTATION_SEED: u64 = 0xF11B;
const MUTATION_COUNT: u64 = 1_000;
const MUTATION_MAX_N: usize = 10;

/// Worker counts compared by the determinism criterion.
const WORKERS: (usize, usize) = (1, 4);

struct Outcome {
    passed: bool,
    detail: String,
}

fn check_outcome(report: &CheckReport, timing: Option<(Duration, Duration)>) -> Outcome {
    let passed = report.passed() && timing.is_none_or(|(elapsed, budget)| elapsed < budget);
    let mut detail = format!(
        "{} graphs, {} evaluated, {} skipped / {} stripped (isolated), {} YES, {} disagreements",
        report.graphs,
        report.evaluated,
        report.skipped_isolated,
        report.stripped_isolated,
        report.yes,
        report.disagreements,
    );
    if let Some((elapsed, budget)) = timing {
        detail.push_str(&format!(", {elapsed:.1?} (budget {budget:?})"));
    }
    if let Some(d) = &report.first_disagreement {
        detail.push_str(&format!("; first: {d:?}"));
    }
    Outcome { passed, detail }
}

fn exhaustive(threads: usize) -> CheckReport {
    run_check(
        &Exhaustive { n: EXHAUSTIVE_N },
        IsolatedPolicy::Skip,
        threads,
    )
    .unwrap()
}

fn sampled(threads: usize) -> CheckReport {
    let batch = RandomBatch {
        seed: RANDOM_SEED,
        count: RANDOM_COUNT,
        min_n: RANDOM_N.0,
        max_n: RANDOM_N.1,
    };
    run_check(&batch, IsolatedPolicy::Skip, threads).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct FamilyRow {
    spec: FamilySpec,
    recognize: Option<Condition>,
    recognize_yes: bool,
    characterization: Option<Condition>,
    oracle_split: bool,
    oracle_equimatchable: bool,
    sizes: BTreeSet<usize>,
    failure: Option<String>,
}

fn family_row(spec: FamilySpec) -> FamilyRow {
    let g = spec.generate().unwrap();
    let result = classify(&g).unwrap();
    let characterization = if g.n() >= 4 {
        check_characterization(&g).unwrap().map(|c| c.condition)
    } else {
        None
    };
    let oracle_split = equisplit_core::is_split_oracle(&g).unwrap();
    let sizes = maximal_matching_sizes(&g).unwrap();
    let oracle_equimatchable = sizes.len() == 1;

    let mut failure = None;
    if !result.is_yes() {
        failure = Some("recognizer said NO".to_string());
    } else if g.n() >= 4 && characterization.is_none() {
        failure = Some("no condition matched".to_string());
    } else if !(oracle_split && oracle_equimatchable) {
        failure = Some(format!("oracle: split={oracle_split}, sizes={sizes:?}"));
    } else if let FamilySpec::Iii { n, r } | FamilySpec::Iv { n, r } = spec {
        if sizes != BTreeSet::from([(n - r) / 2]) {
            failure = Some(format!("sizes {sizes:?}, expected {{{}}}", (n - r) / 2));
        }
    }
    FamilyRow {
        spec,
        recognize: result.condition,
        recognize_yes: result.is_yes(),
        characterization,
        oracle_split,
        oracle_equimatchable,
        sizes,
        failure,
    }
}

fn generator_rows(threads: usize) -> Vec<FamilyRow> {
    let mut specs = vec![
        FamilySpec::I { n: 2 },
        FamilySpec::I { n: 3 },
        FamilySpec::Ii { n: 2 },
        FamilySpec::Ii { n: 3 },
    ];
    specs.extend(FamilySpec::all_up_to(GENERATOR_MAX_N));
    pool(threads).install(|| specs.into_par_iter().map(family_row).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
struct MutationRun {
    report: CheckReport,
    /// `(index, smaller, larger)` for every mutant with witness matchings.
    witnesses: Vec<(u64, Matching, Matching)>,
}

fn mutation_source() -> Mutations {
    Mutations {
        families: FamilySpec::all_up_to(MUTATION_MAX_N),
        seed: MUTATION_SEED,
        count: MUTATION_COUNT,
    }
}

fn mutations(threads: usize) -> MutationRun {
    use equisplit_core::crosscheck::GraphSource;
    let source = mutation_source();
    let report = run_check(&source, IsolatedPolicy::Strip, threads).unwrap();
    let witnesses = pool(threads).install(|| {
        (0..source.len())
            .into_par_iter()
            .filter_map(|i| {
                let (g, _) = source.graph(i).strip_isolated();
                let (small, large) = find_witness_matchings(&g).unwrap()?;
                Some((i, small, large))
            })
            .collect()
    });
    MutationRun { report, witnesses }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
}

fn family_iii_instance(n: usize) -> Graph {
    // Clique side of about sqrt(n) vertices keeps m proportional to n.
    let mut clique = (n as f64).sqrt().round() as usize;
    clique -= clique % 2;
    gen_family_iii(n, n - clique).unwrap()
}

fn bench_rows(graphs: impl IntoIterator<Item = Graph>) -> Vec<BenchRow> {
    graphs
        .into_iter()
        .map(|g| time_recognize(&g, Duration::from_millis(100), 7))
        .collect()
}

fn describe_rows(rows: &[BenchRow]) -> String {
    rows.iter()
        .map(|r| format!("n={} m={} {:.3} ns/unit", r.n, r.m, r.nanos_per_unit))
        .collect::<Vec<_>>()
        .join(", ")
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).unwrap()
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut snapshots: Vec<(&str, String)> = Vec::new();

    // 1. Exhaustive oracle equivalence.
    let start = Instant::now();
    let report = exhaustive(WORKERS.0);
    let elapsed = start.elapsed();
    let mut outcome = check_outcome(&report, Some((elapsed, EXHAUSTIVE_BUDGET)));
    outcome.passed &= report.graphs == EXHAUSTIVE_GRAPHS;
    results.push((
        1,
        "oracle equivalence, all labeled graphs on 6 vertices",
        outcome,
    ));
    snapshots.push(("exhaustive", json(&report)));

    // 2. Sampled oracle equivalence.
    let start = Instant::now();
    let report = sampled(WORKERS.0);
    let elapsed = start.elapsed();
    let mut outcome = check_outcome(&report, Some((elapsed, RANDOM_BUDGET)));
    outcome.passed &= report.evaluated == RANDOM_COUNT;
    results.push((
        2,
        "oracle equivalence, 10^5 random graphs with 7..=12 vertices",
        outcome,
    ));
    snapshots.push(("sampled", json(&report)));

    // 3. Generator soundness.
    let rows = generator_rows(WORKERS.0);
    let failures: Vec<_> = rows.iter().filter(|r| r.failure.is_some()).collect();
    let sized = rows
        .iter()
        .filter(|r| matches!(r.spec, FamilySpec::Iii { .. } | FamilySpec::Iv { .. }))
        .count();
    let mut detail = format!(
        "{} parameterizations (n <= {GENERATOR_MAX_N}), {sized} with size law checked, {} failures",
        rows.len(),
        failures.len()
    );
    if let Some(f) = failures.first() {
        detail.push_str(&format!(
            "; first: {:?} {}",
            f.spec,
            f.failure.as_ref().unwrap()
        ));
    }
    results.push((
        3,
        "family generators are YES for recognizer, characterization and oracles",
        Outcome {
            passed: failures.is_empty() && !rows.is_empty(),
            detail,
        },
    ));
    snapshots.push(("generators", json(&rows)));

    // 4. Lemma suite.
    let lemmas = common::lemma_suite(LEMMA_MAX_N, WORKERS.0);
    let mut detail = format!(
        "{} isolated-free graphs, {} equimatchable split; checked odd clique {}, crossing {}, structure {}, degree sum {}; {} violations",
        lemmas.graphs,
        lemmas.equimatchable_split,
        lemmas.odd_clique_checked,
        lemmas.crossing_checked,
        lemmas.structure_checked,
        lemmas.degree_sum_checked,
        lemmas.violations
    );
    if let Some(v) = &lemmas.first_violation {
        detail.push_str(&format!("; first: {v:?}"));
    }
    results.push((
        4,
        "structural properties of equimatchable split graphs, n <= 7",
        Outcome {
            passed: lemmas.violations == 0 && lemmas.equimatchable_split > 0,
            detail,
        },
    ));
    snapshots.push(("lemmas", json(&lemmas)));

    // 5. Linear-time proxy.
    let iii = bench_rows(FAMILY_III_SIZES.map(family_iii_instance));
    let complete = bench_rows(FAMILY_I_SIZES.map(gen_complete));
    let k2000 = gen_complete(2_000);
    let start = Instant::now();
    let verdict = recognize(&k2000).unwrap();
    let k2000_time = start.elapsed();
    let (iii_spread, i_spread) = (spread(&iii), spread(&complete));
    results.push((
        5,
        "time / (n + m) spread < 3x per family, K_2000 under 1 s",
        Outcome {
            passed: iii_spread < MAX_SPREAD
                && i_spread < MAX_SPREAD
                && k2000_time < K2000_BUDGET
                && verdict.is_yes(),
            detail: format!(
                "family iii spread {iii_spread:.2}x [{}]; family i spread {i_spread:.2}x [{}]; K_2000 {k2000_time:.1?}",
                describe_rows(&iii),
                describe_rows(&complete)
            ),
        },
    ));

    // 6. Mutation robustness.
    let run = mutations(WORKERS.0);
    let mut outcome = check_outcome(&run.report, None);
    outcome.passed &= run.report.graphs == MUTATION_COUNT;
    outcome
        .detail
        .push_str(&format!("; {} witness pairs", run.witnesses.len()));
    results.push((
        6,
        "single-pair mutations of family graphs, n <= 10",
        outcome,
    ));
    snapshots.push(("mutations", json(&run)));

    // 7. Determinism across worker counts.
    let rerun: Vec<(&str, String)> = vec![
        ("exhaustive", json(&exhaustive(WORKERS.1))),
        ("sampled", json(&sampled(WORKERS.1))),
        ("generators", json(&generator_rows(WORKERS.1))),
        ("lemmas", json(&common::lemma_suite(LEMMA_MAX_N, WORKERS.1))),
        ("mutations", json(&mutations(WORKERS.1))),
    ];
    let differing: Vec<&str> = snapshots
        .iter()
        .zip(&rerun)
        .filter(|(a, b)| a != b)
        .map(|(a, _)| a.0)
        .collect();
    results.push((
        7,
        "reports and witnesses identical across worker counts",
        Outcome {
            passed: differing.is_empty() && snapshots.len() == rerun.len(),
            detail: format!(
                "{} reports compared ({} vs {} workers), differing: {:?}",
                snapshots.len(),
                WORKERS.0,
                WORKERS.1,
                differing
            ),
        },
    ));

    let mut failed = 0;
    for (id, name, outcome) in &results {
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        if !outcome.passed {
            failed += 1;
        }
        println!("[{status}] criterion {id}: {name} -- {}", outcome.detail);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
