//! Split partitions: recognition, normalization, and the structural
//! pattern equimatchable split graphs are forced into once the independent
//! side has three or more vertices.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::matching::{adjacency_masks, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("partition is not normalized")]
    NotNormalized,
    #[error("need |I| >= 3 and |K| >= 2, got |I| = {independent}, |K| = {clique}")]
    PartitionTooSmall { clique: usize, independent: usize },
}

/// A clique `K` and an independent set `I` covering the vertex set.
/// Both sides are kept sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
    /// Every clique vertex has a neighbor in `independent`.
    pub normalized: bool,
}

impl SplitPartition {
    /// Checks the partition against `g` edge by edge: disjoint cover,
    /// `clique` pairwise adjacent, `independent` pairwise non-adjacent, and
    /// the normalization property when flagged.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for (&v, in_clique) in self
            .clique
            .iter()
            .map(|v| (v, true))
            .chain(self.independent.iter().map(|v| (v, false)))
        {
            if v == 0 || v > g.n() || side[v - 1].is_some() {
                return false;
            }
            side[v - 1] = Some(in_clique);
        }
        if side.iter().any(Option::is_none) {
            return false;
        }
        let clique_ok = self
            .clique
            .iter()
            .enumerate()
            .all(|(i, &a)| self.clique[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        let independent_ok = self
            .independent
            .iter()
            .all(|&i| g.neighbors(i).iter().all(|&w| side[w - 1] == Some(true)));
        let normalized_ok = !self.normalized
            || self
                .clique
                .iter()
                .all(|&k| g.neighbors(k).iter().any(|&w| side[w - 1] == Some(false)));
        clique_ok && independent_ok && normalized_ok
    }
}

/// Recognizes split graphs from the degree sequence alone.
///
/// With degrees sorted non-increasingly `d_1 >= ... >= d_n` and
/// `h = max{ i : d_i >= i - 1 }`, the graph is split iff
/// `sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i`, and then the `h` vertices of
/// largest degree form a clique and the rest an independent set. Ties are
/// broken by ascending vertex id. O(n + m).
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut buckets = vec![0usize; n + 1];
    for &d in g.degrees() {
        buckets[d] += 1;
    }
    // Start offsets for a descending-degree counting sort.
    let mut start = vec![0usize; n + 1];
    let mut acc = 0;
    for d in (0..=n).rev() {
        start[d] = acc;
        acc += buckets[d];
    }
    let mut order = vec![0; n];
    for v in g.vertices() {
        let slot = &mut start[g.degree(v)];
        order[*slot] = v;
        *slot += 1;
    }

    let h = order
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| g.degree(v) >= i)
        .count();
    let head: usize = order[..h].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[h..].iter().map(|&v| g.degree(v)).sum();
    if head != h * h.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..h].to_vec();
    let mut independent = order[h..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Some(SplitPartition {
        clique,
        independent,
        normalized: false,
    })
}

/// Moves a clique vertex with no neighbor in the independent side over to
/// that side, if there is one. Once one vertex `k` has moved, every other
/// clique vertex sees `k` in the independent side, so at most one move can
/// happen.
pub fn normalize_partition(g: &Graph, sp: &SplitPartition) -> Result<SplitPartition, SplitError> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(SplitError::IsolatedVertex(v));
    }
    let mut in_independent = vec![false; g.n()];
    for &i in &sp.independent {
        in_independent[i - 1] = true;
    }
    let lonely =
        |k: Vertex, in_independent: &[bool]| !g.neighbors(k).iter().any(|&w| in_independent[w - 1]);

    let mut clique = sp.clique.clone();
    let mut independent = sp.independent.clone();
    if let Some(pos) = clique.iter().rposition(|&k| lonely(k, &in_independent)) {
        let k = clique.remove(pos);
        in_independent[k - 1] = true;
        let at = independent.partition_point(|&i| i < k);
        independent.insert(at, k);
        assert!(
            !clique.iter().any(|&k| lonely(k, &in_independent)),
            "a second clique vertex without independent neighbors after moving {k}"
        );
    }
    Ok(SplitPartition {
        clique,
        independent,
        normalized: true,
    })
}

/// Exhaustive split test over all `2^n` choices of clique side. Independent
/// of [`split_partition`]; meant for cross-checking at small `n`.
pub fn is_split_oracle(g: &Graph) -> Result<bool, OracleError> {
    let adj = adjacency_masks(g)?;
    let n = g.n();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok((0..=full).any(|clique| {
        (0..n).all(|v| {
            let others = adj[v];
            if clique & (1 << v) != 0 {
                // Adjacent to every other clique vertex.
                clique & !(1 << v) & !others == 0
            } else {
                // No neighbor outside the clique.
                others & !clique == 0
            }
        })
    }))
}

/// Searches for `x` in `K` and `y` in `I` such that every `z` in `I - y`
/// has `N(z) = {x}` and `N(y)` is `K - x` or `K`. Brute force over all
/// `|K| * |I|` pairs in ascending `(x, y)` order; the first hit is returned.
pub fn find_general_structure(
    g: &Graph,
    sp: &SplitPartition,
) -> Result<Option<(Vertex, Vertex)>, SplitError> {
    if !sp.normalized {
        return Err(SplitError::NotNormalized);
    }
    let (clique, independent) = (sp.clique.len(), sp.independent.len());
    if independent < 3 || clique < 2 {
        return Err(SplitError::PartitionTooSmall {
            clique,
            independent,
        });
    }
    for &x in &sp.clique {
        for &y in &sp.independent {
            let others_pendant = sp
                .independent
                .iter()
                .filter(|&&z| z != y)
                .all(|&z| g.neighbors(z) == [x]);
            if !others_pendant {
                continue;
            }
            // N(y) is a subset of K, so comparing sizes suffices once x is settled.
            let sees_x = g.has_edge(x, y);
            let d = g.degree(y);
            if (sees_x && d == clique) || (!sees_x && d == clique - 1) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
