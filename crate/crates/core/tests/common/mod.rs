//! Helpers shared by the integration and acceptance targets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use equisplit_core::generators::{labeled_graph, labeled_graph_count};
use equisplit_core::{
    compute_degree_stats, find_general_structure, is_equimatchable_oracle, is_split_oracle,
    max_independent_crossing_edges, normalize_partition, split_partition, Graph, Matching,
};
use rayon::prelude::*;
use serde::Serialize;

/// Second, independent equimatchability oracle: filter all `2^m` edge
/// subsets down to maximal matchings and collect their sizes.
pub fn subset_sizes(g: &Graph) -> BTreeSet<usize> {
    let edges: Vec<_> = g.edges().collect();
    assert!(edges.len() < 24, "2^m enumeration is too large");
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let m = Matching::new(
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            );
            m.is_maximal_in(g).then(|| m.len())
        })
        .collect()
}

pub fn isolated_free_labeled(n: usize) -> impl ParallelIterator<Item = Graph> {
    (0..labeled_graph_count(n))
        .into_par_iter()
        .map(move |mask| labeled_graph(n, mask))
        .filter(|g| g.isolated_vertices().next().is_none())
}

#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub graphs: u64,
    pub equimatchable_split: u64,
    pub odd_clique_checked: u64,
    pub crossing_checked: u64,
    pub structure_checked: u64,
    pub degree_sum_checked: u64,
    pub violations: u64,
    /// Smallest offending graph text with the failed property.
    pub first_violation: Option<(String, String)>,
}

impl LemmaReport {
    fn merge(mut self, o: LemmaReport) -> LemmaReport {
        self.graphs += o.graphs;
        self.equimatchable_split += o.equimatchable_split;
        self.odd_clique_checked += o.odd_clique_checked;
        self.crossing_checked += o.crossing_checked;
        self.structure_checked += o.structure_checked;
        self.degree_sum_checked += o.degree_sum_checked;
        self.violations += o.violations;
        self.first_violation = match (self.first_violation, o.first_violation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Checks the structural properties every equimatchable split graph must
/// have, on its canonical normalized partition.
pub fn lemma_check(g: &Graph) -> LemmaReport {
    let mut report = LemmaReport {
        graphs: 1,
        ..Default::default()
    };
    let certified = is_split_oracle(g).unwrap() && is_equimatchable_oracle(g).unwrap();
    if !certified {
        return report;
    }
    report.equimatchable_split = 1;
    let mut fail = |what: &str| {
        report.violations += 1;
        report
            .first_violation
            .get_or_insert_with(|| (g.to_edge_list(), what.to_string()));
    };

    let Some(sp) = split_partition(g) else {
        fail("split_partition missed a split graph");
        return report;
    };
    let sp = normalize_partition(g, &sp).unwrap();
    if !sp.is_valid_for(g) {
        fail("normalized partition is invalid");
    }
    let (k, i) = (sp.clique.len(), sp.independent.len());

    let mut odd_clique = false;
    let mut structure = false;
    let mut degree_sum = false;
    if k >= 2 && i >= 2 {
        odd_clique = true;
        if k % 2 == 0 {
            fail("clique side has even size");
        }
    }
    if max_independent_crossing_edges(g, &sp).unwrap() > 2 {
        fail("three disjoint crossing edges");
    }
    if i >= 3 && k >= 2 {
        structure = true;
        if find_general_structure(g, &sp).unwrap().is_none() {
            fail("no (x, y) structure pair");
        }
    }
    let n = g.n();
    if n >= 4 {
        let stats = compute_degree_stats(g);
        let d = |k: usize| stats.d(g, k);
        if d(2) >= 2 && d(2) <= n - 2 {
            degree_sum = true;
            if d(1) + d(2) != stats.p + n - 2 {
                fail("d(v1) + d(v2) != p + n - 2");
            }
        }
    }
    report.odd_clique_checked = odd_clique as u64;
    report.crossing_checked = 1;
    report.structure_checked = structure as u64;
    report.degree_sum_checked = degree_sum as u64;
    report
}

/// Runs [`lemma_check`] over every isolated-free labeled graph with
/// `2 <= n <= max_n`, on `threads` workers.
pub fn lemma_suite(max_n: usize, threads: usize) -> LemmaReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    pool.install(|| {
        (2..=max_n)
            .map(|n| {
                isolated_free_labeled(n)
                    .map(|g| lemma_check(&g))
                    .reduce(LemmaReport::default, LemmaReport::merge)
            })
            .fold(LemmaReport::default(), LemmaReport::merge)
    })
}
