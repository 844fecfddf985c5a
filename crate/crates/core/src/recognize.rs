//! Linear-time recognition of equimatchable split graphs.
//!
//! [`recognize`] decides membership from the degree ordering, the counters
//! `p`, `r`, `q`, and at most one adjacency query. [`check_characterization`]
//! tests the five structural conditions one by one with no shortcuts and
//! serves as an internal cross-check. Both require `n >= 4` and no isolated
//! vertices; [`small_case`] covers `n <= 3` by brute force.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DegreeStats, Graph, Vertex};
use crate::matching::{is_equimatchable_oracle, OracleError};
use crate::split::is_split_oracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("graph has {0} vertices; the degree test needs at least 4")]
    TooSmall(usize),
    #[error("small-case routine handles 1..=3 vertices, got {0}")]
    NotSmall(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The five families of equimatchable split graphs on four or more
/// vertices, in the order they are tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Complete graph: `p = n`.
    I,
    /// Star: `r = n - 1`, `p = 1`.
    II,
    /// One universal vertex carrying all pendants, the rest a clique.
    III,
    /// Pendants on `x` with `d(x) = n - 2`, and `y` seeing the clique minus `x`.
    IV,
    /// Two vertices outside a clique of odd size that every clique vertex sees.
    V,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::V => "v",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown condition tag {s:?}"))
    }
}

impl Serialize for Condition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Why a graph was rejected, or how a small graph was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// `d(v_2) >= 2` branch: `n` is even.
    NEvenInCliqueBranch,
    /// `d(v_2) >= 2` branch: `d(v_3) < n - 2`.
    ThirdDegreeBelowNMinus2,
    /// `d(v_2) >= 2` branch: `d(v_1) + d(v_2) != p + n - 2`.
    DegreeSumMismatch,
    /// `d(v_2) = 1` branch: none of the pendant conditions held.
    NoConditionMatched,
    /// Decided by the exhaustive oracles (`n <= 3`).
    SmallCaseOracle,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NEvenInCliqueBranch => "n-even-in-clique-branch",
            Reason::ThirdDegreeBelowNMinus2 => "third-degree-below-n-minus-2",
            Reason::DegreeSumMismatch => "degree-sum-mismatch",
            Reason::NoConditionMatched => "no-condition-matched",
            Reason::SmallCaseOracle => "small-case-oracle",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The distinguished pair of conditions (iv) and (v).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ConditionProfile {
    pub x: Vertex,
    pub y: Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    /// Set on every YES from [`recognize`].
    pub condition: Option<Condition>,
    /// Set on every NO, and on results from [`small_case`].
    pub reason: Option<Reason>,
    /// `(x, y)` for YES answers under (iv) or (v).
    pub profile: Option<ConditionProfile>,
    pub stats: DegreeStats,
}

impl RecognitionResult {
    fn yes(condition: Condition, profile: Option<ConditionProfile>, stats: DegreeStats) -> Self {
        RecognitionResult {
            verdict: Verdict::Yes,
            condition: Some(condition),
            reason: None,
            profile,
            stats,
        }
    }

    fn no(reason: Reason, stats: DegreeStats) -> Self {
        RecognitionResult {
            verdict: Verdict::No,
            condition: None,
            reason: Some(reason),
            profile: None,
            stats,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

fn check_preconditions(g: &Graph) -> Result<(), RecognizeError> {
    if g.n() < 4 {
        return Err(RecognizeError::TooSmall(g.n()));
    }
    match g.isolated_vertices().next() {
        Some(v) => Err(RecognizeError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Decides whether `g` is an equimatchable split graph in O(n + m).
///
/// Only the degree array, the counters `p`, `r`, `q` and the degrees at
/// positions 1, 2, 3, `r + 1` and `n` of the ordering are read, plus a
/// single adjacency query between `v_{r+1}` and `v_n`.
pub fn recognize(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    check_preconditions(g)?;
    let n = g.n();
    let stats = DegreeStats::compute(g);
    let d = |k: usize| stats.d(g, k);
    let (p, r, q) = (stats.p, stats.r, stats.q);

    if d(2) == n - 1 {
        return Ok(RecognitionResult::yes(Condition::I, None, stats));
    }

    if d(2) >= 2 {
        let reason = if n.is_multiple_of(2) {
            Reason::NEvenInCliqueBranch
        } else if d(3) < n - 2 {
            Reason::ThirdDegreeBelowNMinus2
        } else if d(1) + d(2) != p + n - 2 {
            Reason::DegreeSumMismatch
        } else {
            let profile = ConditionProfile {
                x: stats.v(1),
                y: stats.v(2),
            };
            return Ok(RecognitionResult::yes(Condition::V, Some(profile), stats));
        };
        return Ok(RecognitionResult::no(reason, stats));
    }

    // d(v_2) = 1, and with no isolated vertices d(v_1) = 1 as well.
    debug_assert!(r >= 2);
    if p == 1 {
        if r == n - 1 {
            return Ok(RecognitionResult::yes(Condition::II, None, stats));
        }
        if (n - r).is_multiple_of(2) && q == n - r - 1 {
            return Ok(RecognitionResult::yes(Condition::III, None, stats));
        }
    }
    if r < n {
        let (y, x) = (stats.v(r + 1), stats.v(n));
        // With p >= 1 the last vertex has degree n - 1, so this cannot fire.
        if (n - r).is_multiple_of(2)
            && n - r >= 2
            && d(r + 1) == n - r - 2
            && q == n - r - 2
            && d(n) == n - 2
            && !g.has_edge(y, x)
        {
            debug_assert_eq!(p, 0);
            let profile = ConditionProfile { x, y };
            return Ok(RecognitionResult::yes(Condition::IV, Some(profile), stats));
        }
    }
    Ok(RecognitionResult::no(Reason::NoConditionMatched, stats))
}

/// A condition together with the pair that witnesses it, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Characterization {
    pub condition: Condition,
    pub profile: Option<ConditionProfile>,
}

/// Tests the five conditions literally, in order, and returns the first
/// that holds. The pair searches for (iv) and (v) are quadratic.
pub fn check_characterization(g: &Graph) -> Result<Option<Characterization>, RecognizeError> {
    check_preconditions(g)?;
    let n = g.n();
    let mut histogram = vec![0usize; n];
    for &d in g.degrees() {
        histogram[d] += 1;
    }
    let p = histogram[n - 1];
    let r = histogram[1];
    let plain = |condition| Characterization {
        condition,
        profile: None,
    };
    let count_in = |set: &[usize]| -> usize {
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        set.iter().filter(|&&d| d < n).map(|&d| histogram[d]).sum()
    };

    if p == n {
        return Ok(Some(plain(Condition::I)));
    }
    if r == n - 1 && p == 1 {
        return Ok(Some(plain(Condition::II)));
    }
    let n_minus_r_even = (n - r).is_multiple_of(2);
    if p == 1 && r >= 2 && n_minus_r_even && count_in(&[1, n - r - 1, n - 1]) == n {
        return Ok(Some(plain(Condition::III)));
    }

    if p == 0 && r >= 2 && n_minus_r_even && n - r >= 2 {
        let allowed = [1, n - r - 1];
        let good = count_in(&allowed);
        let is_allowed = |v: Vertex| allowed.contains(&g.degree(v));
        for x in g.vertices().filter(|&x| g.degree(x) == n - 2) {
            for y in g.vertices().filter(|&y| y != x && g.degree(y) == n - r - 2) {
                let others = good - usize::from(is_allowed(x)) - usize::from(is_allowed(y));
                if others == n - 2 && !g.has_edge(x, y) {
                    return Ok(Some(Characterization {
                        condition: Condition::IV,
                        profile: Some(ConditionProfile { x, y }),
                    }));
                }
            }
        }
    }

    if n % 2 == 1 {
        let allowed = [n - 1, n - 2];
        let good = count_in(&allowed);
        let is_allowed = |v: Vertex| allowed.contains(&g.degree(v));
        for x in g.vertices() {
            for y in g.vertices().filter(|&y| y > x) {
                let others = good - usize::from(is_allowed(x)) - usize::from(is_allowed(y));
                if others == n - 2 && g.degree(x) + g.degree(y) == p + n - 2 {
                    return Ok(Some(Characterization {
                        condition: Condition::V,
                        profile: Some(ConditionProfile { x, y }),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Graphs on one to three vertices, decided by the exhaustive oracles.
pub fn small_case(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    let n = g.n();
    if n == 0 || n > 3 {
        return Err(RecognizeError::NotSmall(n));
    }
    if let Some(v) = g.isolated_vertices().next() {
        return Err(RecognizeError::IsolatedVertex(v));
    }
    let yes = is_split_oracle(g)? && is_equimatchable_oracle(g)?;
    Ok(RecognitionResult {
        verdict: if yes { Verdict::Yes } else { Verdict::No },
        condition: None,
        reason: Some(Reason::SmallCaseOracle),
        profile: None,
        stats: DegreeStats::compute(g),
    })
}

/// [`recognize`] for `n >= 4`, [`small_case`] below that.
pub fn classify(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    if g.n() <= 3 {
        small_case(g)
    } else {
        recognize(g)
    }
}
