//! Exhaustive maximal-matching enumeration for small graphs.
//!
//! Everything here is exponential and guarded by [`ORACLE_MAX_N`]. These
//! routines are the ground truth the linear-time recognizer is checked
//! against, so they work from the definitions only.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::split::SplitPartition;

/// Largest vertex count the brute-force oracles accept.
pub const ORACLE_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; exhaustive oracles are limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Neighborhood bitmasks, bit `v - 1` for vertex `v`.
pub(crate) fn adjacency_masks(g: &Graph) -> Result<Vec<u32>, OracleError> {
    if g.n() > ORACLE_MAX_N {
        return Err(OracleError::TooLarge {
            n: g.n(),
            limit: ORACLE_MAX_N,
        });
    }
    Ok(g.vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &w| acc | 1 << (w - 1))
        })
        .collect())
}

/// A set of edges, stored sorted with each edge as `(u, v)`, `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Saturated vertices, ascending.
    pub fn saturated(&self) -> Vec<Vertex> {
        let mut vs: Vec<_> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// Every edge is an edge of `g` and no two edges share an endpoint.
    pub fn is_matching_in(&self, g: &Graph) -> bool {
        let saturated = self.saturated();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && v <= g.n() && u >= 1 && g.has_edge(u, v))
            && saturated.windows(2).all(|w| w[0] != w[1])
    }

    /// A matching of `g` that leaves no edge with both ends unsaturated.
    pub fn is_maximal_in(&self, g: &Graph) -> bool {
        if !self.is_matching_in(g) {
            return false;
        }
        let mut covered = vec![false; g.n()];
        for v in self.saturated() {
            covered[v - 1] = true;
        }
        g.edges().all(|(u, v)| covered[u - 1] || covered[v - 1])
    }
}

/// Depth-first enumeration of the maximal matchings of a graph given as
/// bitmasks. At each node the lowest vertex `u` that is still free and has
/// a free neighbor either gets matched to one of those neighbors, in
/// ascending order, or is declared unmatched for good. Leaves that leave
/// an edge uncovered are discarded. Each maximal matching is reached once.
struct Enumerator<'a> {
    adj: &'a [u32],
    full: u32,
    stack: Vec<(Vertex, Vertex)>,
}

impl Enumerator<'_> {
    fn walk<F>(&mut self, saturated: u32, skipped: u32, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[(Vertex, Vertex)]) -> ControlFlow<()>,
    {
        let free = self.full & !saturated & !skipped;
        let mut scan = free;
        let mut branch = None;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let options = self.adj[u] & free;
            if options != 0 {
                branch = Some((u, options));
                break;
            }
        }

        let Some((u, mut options)) = branch else {
            let unsaturated = self.full & !saturated;
            let mut rest = unsaturated;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj[v] & unsaturated != 0 {
                    return ControlFlow::Continue(());
                }
            }
            return visit(&self.stack);
        };

        while options != 0 {
            let v = options.trailing_zeros() as usize;
            options &= options - 1;
            self.stack.push((u + 1, v + 1));
            let flow = self.walk(saturated | 1 << u | 1 << v, skipped, visit);
            self.stack.pop();
            flow?;
        }
        // Two adjacent unmatched vertices can never become a maximal matching.
        if self.adj[u] & skipped == 0 {
            self.walk(saturated, skipped | 1 << u, visit)?;
        }
        ControlFlow::Continue(())
    }
}

fn for_each_maximal_matching<F>(g: &Graph, mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&[(Vertex, Vertex)]) -> ControlFlow<()>,
{
    let adj = adjacency_masks(g)?;
    let full = if g.n() == 0 {
        0
    } else {
        u32::MAX >> (32 - g.n())
    };
    let mut e = Enumerator {
        adj: &adj,
        full,
        stack: Vec::with_capacity(g.n() / 2),
    };
    let _ = e.walk(0, 0, &mut visit);
    Ok(())
}

/// The exact set `{ |M| : M maximal matching of g }`.
pub fn maximal_matching_sizes(g: &Graph) -> Result<BTreeSet<usize>, OracleError> {
    let mut sizes = BTreeSet::new();
    for_each_maximal_matching(g, |m| {
        sizes.insert(m.len());
        ControlFlow::Continue(())
    })?;
    Ok(sizes)
}

/// All maximal matchings have the same size. Stops as soon as two sizes
/// have been seen.
pub fn is_equimatchable_oracle(g: &Graph) -> Result<bool, OracleError> {
    let mut first = None;
    let mut mixed = false;
    for_each_maximal_matching(g, |m| match first {
        None => {
            first = Some(m.len());
            ControlFlow::Continue(())
        }
        Some(s) if s == m.len() => ControlFlow::Continue(()),
        Some(_) => {
            mixed = true;
            ControlFlow::Break(())
        }
    })?;
    Ok(!mixed)
}

/// Two maximal matchings of different sizes, or `None` if the graph is
/// equimatchable. The first is the lexicographically smallest maximal
/// matching of minimum size, the second the smallest of maximum size.
pub fn find_witness_matchings(g: &Graph) -> Result<Option<(Matching, Matching)>, OracleError> {
    let mut smallest: Option<Vec<(Vertex, Vertex)>> = None;
    let mut largest: Option<Vec<(Vertex, Vertex)>> = None;
    for_each_maximal_matching(g, |m| {
        let better_small = smallest
            .as_ref()
            .is_none_or(|s| (m.len(), m) < (s.len(), s.as_slice()));
        if better_small {
            smallest = Some(m.to_vec());
        }
        let better_large = largest
            .as_ref()
            .is_none_or(|l| m.len() > l.len() || (m.len() == l.len() && m < l.as_slice()));
        if better_large {
            largest = Some(m.to_vec());
        }
        ControlFlow::Continue(())
    })?;
    Ok(match (smallest, largest) {
        (Some(s), Some(l)) if s.len() < l.len() => Some((Matching::new(s), Matching::new(l))),
        _ => None,
    })
}

/// Largest number of pairwise disjoint edges running between the clique
/// and the independent side of `sp`, by augmenting paths.
pub fn max_independent_crossing_edges(
    g: &Graph,
    sp: &SplitPartition,
) -> Result<usize, OracleError> {
    if g.n() > ORACLE_MAX_N {
        return Err(OracleError::TooLarge {
            n: g.n(),
            limit: ORACLE_MAX_N,
        });
    }
    let mut in_independent = vec![false; g.n()];
    for &i in &sp.independent {
        in_independent[i - 1] = true;
    }
    let mut mate: Vec<Option<Vertex>> = vec![None; g.n()];

    fn augment(
        g: &Graph,
        k: Vertex,
        in_independent: &[bool],
        seen: &mut [bool],
        mate: &mut [Option<Vertex>],
    ) -> bool {
        for &i in g.neighbors(k) {
            if !in_independent[i - 1] || seen[i - 1] {
                continue;
            }
            seen[i - 1] = true;
            let free = match mate[i - 1] {
                None => true,
                Some(other) => augment(g, other, in_independent, seen, mate),
            };
            if free {
                mate[i - 1] = Some(k);
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for &k in &sp.clique {
        let mut seen = vec![false; g.n()];
        if augment(g, k, &in_independent, &mut seen, &mut mate) {
            size += 1;
        }
    }
    Ok(size)
}
