//! Simple undirected graphs on dense 1-based vertex ids.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are kept strictly
//! increasing so membership tests are a binary search, and every graph has
//! exactly one canonical text form (see [`Graph::to_edge_list`]).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Vertex identifier, `1..=n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
}

/// Errors from [`parse_graph`]. Every variant carries the 1-based line
/// number it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected header \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected edge \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v} (first seen on line {first_line})")]
    DuplicateEdge {
        line: usize,
        first_line: usize,
        u: Vertex,
        v: Vertex,
    },
    #[error("line {line}: header declares {expected} edges but {found} were given")]
    EdgeCountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match *self {
            ParseError::MalformedHeader { line }
            | ParseError::MalformedEdge { line }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::DuplicateEdge { line, .. }
            | ParseError::EdgeCountMismatch { line, .. } => line,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    adjacency: Vec<Vec<Vertex>>,
    degrees: Vec<usize>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            m: 0,
            adjacency: vec![Vec::new(); n],
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; self-loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
            m += 1;
        }
        for (i, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (i + 1, w[0]);
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        let degrees = adjacency.iter().map(Vec::len).collect();
        Ok(Graph {
            m,
            adjacency,
            degrees,
        })
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + Clone {
        1..=self.n()
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v - 1]
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v - 1]
    }

    /// Degrees indexed by `v - 1`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Checked adjacency query.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        Ok(self.has_edge(u, v))
    }

    /// Adjacency query by binary search on the shorter of the two lists.
    /// Panics if either vertex is out of range.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    /// Induced subgraph on the vertices of positive degree, relabeled
    /// `1..=n'` in their original relative order. Also returns how many
    /// vertices were dropped.
    pub fn strip_isolated(&self) -> (Graph, usize) {
        let mut relabel = vec![0; self.n()];
        let mut next = 0;
        for v in self.vertices() {
            if self.degree(v) > 0 {
                next += 1;
                relabel[v - 1] = next;
            }
        }
        let removed = self.n() - next;
        if removed == 0 {
            return (self.clone(), 0);
        }
        let adjacency: Vec<Vec<Vertex>> = self
            .adjacency
            .iter()
            .filter(|list| !list.is_empty())
            .map(|list| list.iter().map(|&w| relabel[w - 1]).collect())
            .collect();
        let degrees = adjacency.iter().map(Vec::len).collect();
        let g = Graph {
            m: self.m,
            adjacency,
            degrees,
        };
        (g, removed)
    }

    /// The same graph with the pair `{u, v}` toggled.
    pub fn with_pair_flipped(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let present = self.adjacent(u, v)?;
        let mut adjacency = self.adjacency.clone();
        if present {
            adjacency[u - 1].retain(|&w| w != v);
            adjacency[v - 1].retain(|&w| w != u);
        } else {
            for (a, b) in [(u, v), (v, u)] {
                let list = &mut adjacency[a - 1];
                let at = list.partition_point(|&w| w < b);
                list.insert(at, b);
            }
        }
        let degrees = adjacency.iter().map(Vec::len).collect();
        Ok(Graph {
            m: if present { self.m - 1 } else { self.m + 1 },
            adjacency,
            degrees,
        })
    }

    /// Canonical text form: header `n m`, then one `u v` line per edge
    /// with `u < v` in lexicographic order. Every line ends with LF.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.m())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

fn parse_uint(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let (a, b) = line.split_once(' ')?;
    Some((parse_uint(a)?, parse_uint(b)?))
}

/// Parses the edge-list format: optional `#` comment lines, a header line
/// `n m`, then exactly `m` lines `u v`. Tokens are separated by a single
/// space. LF and CRLF endings are both accepted.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .peekable();
    let mut last_line = 0;
    let mut header = None;
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();

    while let Some((no, line)) = lines.next() {
        // A trailing newline leaves one empty final piece.
        if line.is_empty() && lines.peek().is_none() {
            break;
        }
        last_line = no;
        if line.starts_with('#') {
            continue;
        }
        let Some((n, m)) = header else {
            let parsed = parse_pair(line).ok_or(ParseError::MalformedHeader { line: no })?;
            header = Some(parsed);
            continue;
        };
        let (u, v) = parse_pair(line).ok_or(ParseError::MalformedEdge { line: no })?;
        for vertex in [u, v] {
            if vertex == 0 || vertex > n {
                return Err(ParseError::VertexOutOfRange {
                    line: no,
                    vertex,
                    n,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop {
                line: no,
                vertex: u,
            });
        }
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                line: no,
                expected: m,
                found: m + 1,
            });
        }
        edges.push((u.min(v), u.max(v), no));
    }

    let Some((n, m)) = header else {
        return Err(ParseError::MalformedHeader {
            line: last_line.max(1),
        });
    };
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v))).map_err(|e| match e {
        GraphError::DuplicateEdge(u, v) => {
            let mut seen = edges.iter().filter(|&&(a, b, _)| (a, b) == (u, v));
            let first_line = seen.next().map_or(0, |e| e.2);
            let line = seen.next().map_or(0, |e| e.2);
            ParseError::DuplicateEdge {
                line,
                first_line,
                u,
                v,
            }
        }
        // Range and loop checks already ran line by line.
        other => unreachable!("edge validated during parsing: {other}"),
    })
}

/// Non-decreasing degree ordering of the vertices together with the
/// three degree-class counters used by the recognizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    /// `v_1, ..., v_n`; ties broken by ascending vertex id.
    pub ordering: Vec<Vertex>,
    /// Number of vertices of degree `n - 1`.
    pub p: usize,
    /// Number of vertices of degree 1.
    pub r: usize,
    /// Number of vertices of degree `n - r - 1` (0 when that is negative).
    pub q: usize,
}

impl DegreeStats {
    /// Counting sort over degree values `0..n`, then one pass for the
    /// counters. O(n) given the degree array.
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut count = vec![0usize; n.max(1) + 1];
        for &d in g.degrees() {
            count[d] += 1;
        }
        let p = if n >= 1 { count[n - 1] } else { 0 };
        let r = count.get(1).copied().unwrap_or(0);
        let q = (n as isize - r as isize - 1)
            .try_into()
            .map_or(0, |d: usize| count.get(d).copied().unwrap_or(0));

        let mut start = count;
        let mut acc = 0;
        for slot in start.iter_mut() {
            let c = *slot;
            *slot = acc;
            acc += c;
        }
        let mut ordering = vec![0; n];
        for v in g.vertices() {
            let slot = &mut start[g.degree(v)];
            ordering[*slot] = v;
            *slot += 1;
        }
        DegreeStats { ordering, p, r, q }
    }

    /// `v_k` for 1-based `k`.
    pub fn v(&self, k: usize) -> Vertex {
        self.ordering[k - 1]
    }

    /// `d(v_k)` for 1-based `k`.
    pub fn d(&self, g: &Graph, k: usize) -> usize {
        g.degree(self.v(k))
    }
}

pub fn compute_degree_stats(g: &Graph) -> DegreeStats {
    DegreeStats::compute(g)
}
