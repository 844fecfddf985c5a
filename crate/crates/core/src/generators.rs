//! Graph generators: the five equimatchable split families with fixed
//! vertex numbering, seeded random graphs, single-pair mutation, and
//! exhaustive enumeration of labeled graphs.
//!
//! Numbering used by the families:
//!
//! | family | layout |
//! |--------|--------|
//! | (i)    | `K_n` on `1..=n` |
//! | (ii)   | star, center `1`, leaves `2..=n` |
//! | (iii)  | clique `1..=n-r` with `u = 1`; leaves `n-r+1..=n` on `u` |
//! | (iv)   | clique `1..=n-r-1` with `x = 1`; `y = n-r` sees `2..=n-r-1`; leaves on `x` |
//! | (v)    | clique `1..=n-2`; `x = n-1` sees `A` and `A_y`; `y = n` sees `A` and `A_x` |
//!
//! For (v), `A = 1..=a`, `A_x = a+1..=a+b`, `A_y = a+b+1..=n-2`.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::recognize::Condition;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid parameters for family ({family}): {detail}")]
    InvalidFamily { family: Condition, detail: String },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

fn invalid(family: Condition, detail: impl Into<String>) -> GenError {
    GenError::InvalidFamily {
        family,
        detail: detail.into(),
    }
}

/// Parameters of one equimatchable split family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    I {
        n: usize,
    },
    Ii {
        n: usize,
    },
    Iii {
        n: usize,
        r: usize,
    },
    Iv {
        n: usize,
        r: usize,
    },
    V {
        n: usize,
        a: usize,
        b: usize,
        c: usize,
    },
}

impl FamilySpec {
    pub fn condition(&self) -> Condition {
        match self {
            FamilySpec::I { .. } => Condition::I,
            FamilySpec::Ii { .. } => Condition::II,
            FamilySpec::Iii { .. } => Condition::III,
            FamilySpec::Iv { .. } => Condition::IV,
            FamilySpec::V { .. } => Condition::V,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::I { n }
            | FamilySpec::Ii { n }
            | FamilySpec::Iii { n, .. }
            | FamilySpec::Iv { n, .. }
            | FamilySpec::V { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let family = self.condition();
        match *self {
            FamilySpec::I { n } if n < 1 => Err(invalid(family, "need n >= 1")),
            FamilySpec::Ii { n } if n < 2 => Err(invalid(family, "need n >= 2")),
            FamilySpec::Iii { n, r } | FamilySpec::Iv { n, r } => {
                if r < 2 {
                    Err(invalid(family, format!("need r >= 2, got r = {r}")))
                } else if n < r + 4 {
                    Err(invalid(
                        family,
                        format!("need n - r >= 4, got n = {n}, r = {r}"),
                    ))
                } else if (n - r) % 2 != 0 {
                    Err(invalid(family, format!("n - r = {} is odd", n - r)))
                } else {
                    Ok(())
                }
            }
            FamilySpec::V { n, a, b, c } => {
                if n < 5 || n % 2 == 0 {
                    Err(invalid(family, format!("need odd n >= 5, got {n}")))
                } else if a + b + c != n - 2 {
                    Err(invalid(
                        family,
                        format!("a + b + c = {} but n - 2 = {}", a + b + c, n - 2),
                    ))
                } else if a + c == 0 || a + b == 0 {
                    Err(invalid(
                        family,
                        "x and y each need a neighbor (a + c >= 1, a + b >= 1)",
                    ))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::I { n } => gen_complete(n),
            FamilySpec::Ii { n } => build(n, star_edges(n)),
            FamilySpec::Iii { n, r } => {
                let clique = n - r;
                let leaves = (clique + 1..=n).map(|l| (1, l));
                build(n, clique_edges(1..=clique).chain(leaves))
            }
            FamilySpec::Iv { n, r } => {
                let (k, y) = (n - r - 1, n - r);
                let to_y = (2..=k).map(move |v| (v, y));
                let leaves = (y + 1..=n).map(|l| (1, l));
                build(n, clique_edges(1..=k).chain(to_y).chain(leaves))
            }
            FamilySpec::V { n, a, b, c } => {
                let (x, y) = (n - 1, n);
                let both = (1..=a).flat_map(move |v| [(v, x), (v, y)]);
                let miss_x = (a + 1..=a + b).map(move |v| (v, y));
                let miss_y = (a + b + 1..=a + b + c).map(move |v| (v, x));
                build(
                    n,
                    clique_edges(1..=n - 2)
                        .chain(both)
                        .chain(miss_x)
                        .chain(miss_y),
                )
            }
        })
    }

    /// Every valid parameterization with `4 <= n <= max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for n in 4..=max_n {
            out.push(FamilySpec::I { n });
            out.push(FamilySpec::Ii { n });
            for r in 2..=n {
                for spec in [FamilySpec::Iii { n, r }, FamilySpec::Iv { n, r }] {
                    if spec.validate().is_ok() {
                        out.push(spec);
                    }
                }
            }
            for a in 0..=n.saturating_sub(2) {
                for b in 0..=n - 2 - a {
                    let spec = FamilySpec::V {
                        n,
                        a,
                        b,
                        c: n - 2 - a - b,
                    };
                    if spec.validate().is_ok() {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

fn clique_edges(range: std::ops::RangeInclusive<Vertex>) -> impl Iterator<Item = (Vertex, Vertex)> {
    let hi = *range.end();
    range.flat_map(move |u| (u + 1..=hi).map(move |v| (u, v)))
}

fn star_edges(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (2..=n).map(|v| (1, v))
}

fn build(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge list")
}

pub fn gen_complete(n: usize) -> Graph {
    build(n, clique_edges(1..=n))
}

pub fn gen_star(n: usize) -> Result<Graph, GenError> {
    FamilySpec::Ii { n }.generate()
}

pub fn gen_family_iii(n: usize, r: usize) -> Result<Graph, GenError> {
    FamilySpec::Iii { n, r }.generate()
}

pub fn gen_family_iv(n: usize, r: usize) -> Result<Graph, GenError> {
    FamilySpec::Iv { n, r }.generate()
}

pub fn gen_family_v(n: usize, a: usize, b: usize, c: usize) -> Result<Graph, GenError> {
    FamilySpec::V { n, a, b, c }.generate()
}

fn check_probability(name: &str, p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::OutOfRange(format!(
            "{name} = {p} is not in [0, 1]"
        )))
    }
}

/// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
pub fn gen_random_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph, GenError> {
    check_probability("edge probability", edge_probability)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// Random split graph with a clique of `clique_size` vertices. Each
/// clique/independent pair is joined with `attach_probability`; afterwards
/// every independent vertex without a neighbor and every clique vertex
/// without an independent neighbor gets one uniformly random partner, so
/// there are no isolated vertices and the clique side is normalized.
/// Vertex labels are shuffled.
pub fn gen_random_split(
    n: usize,
    clique_size: usize,
    attach_probability: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    check_probability("attach probability", attach_probability)?;
    if clique_size == 0 || clique_size >= n {
        return Err(GenError::OutOfRange(format!(
            "clique size {clique_size} must lie in 1..{n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let independent = n - clique_size;
    let mut cross = vec![vec![false; independent]; clique_size];
    for row in cross.iter_mut() {
        for cell in row.iter_mut() {
            *cell = rng.random_bool(attach_probability);
        }
    }
    for i in 0..independent {
        if !cross.iter().any(|row| row[i]) {
            cross[rng.random_range(0..clique_size)][i] = true;
        }
    }
    for row in cross.iter_mut() {
        if !row.iter().any(|&c| c) {
            row[rng.random_range(0..independent)] = true;
        }
    }

    let mut label: Vec<Vertex> = (1..=n).collect();
    label.shuffle(&mut rng);
    let mut edges: Vec<_> = clique_edges(1..=clique_size).collect();
    for (k, row) in cross.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if c {
                edges.push((k + 1, clique_size + i + 1));
            }
        }
    }
    Ok(build(
        n,
        edges.into_iter().map(|(u, v)| (label[u - 1], label[v - 1])),
    ))
}

/// The pair with index `index` in the lexicographic order of
/// `(1,2), (1,3), ..., (n-1,n)`.
pub fn pair_at(n: usize, mut index: usize) -> (Vertex, Vertex) {
    for u in 1..n {
        let row = n - u;
        if index < row {
            return (u, u + 1 + index);
        }
        index -= row;
    }
    panic!("pair index out of range for n = {n}");
}

/// Flips one uniformly chosen vertex pair. Applying the same seed twice
/// restores the original graph.
pub fn mutate_edge(g: &Graph, seed: u64) -> Result<Graph, GenError> {
    let n = g.n();
    if n < 2 {
        return Err(GenError::OutOfRange(format!(
            "need n >= 2 to flip a pair, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (u, v) = pair_at(n, rng.random_range(0..n * (n - 1) / 2));
    Ok(g.with_pair_flipped(u, v).expect("pair is in range"))
}

/// Number of labeled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is given by the bits of `mask` over the
/// lexicographic pair order of [`pair_at`].
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let edges = (0..pairs)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| pair_at(n, i));
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees().to_vec();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(gen_complete(4).degrees(), &[3, 3, 3, 3]);
        assert_eq!(gen_complete(1), Graph::empty(1));
        assert_eq!(gen_star(4).unwrap().degrees(), &[3, 1, 1, 1]);
        assert_eq!(gen_star(2).unwrap(), gen_complete(2));
        assert!(gen_star(1).is_err());
    }

    #[test]
    fn family_iii_layout() {
        let g = gen_family_iii(6, 2).unwrap();
        assert_eq!(g.degrees(), &[5, 3, 3, 3, 1, 1]);
        assert!(gen_family_iii(8, 4).is_ok());
        assert!(matches!(
            gen_family_iii(7, 2),
            Err(GenError::InvalidFamily {
                family: Condition::III,
                ..
            })
        ));
    }

    #[test]
    fn family_iv_layout() {
        let g = gen_family_iv(6, 2).unwrap();
        assert_eq!(g.degrees(), &[4, 3, 3, 2, 1, 1]);
        let g = gen_family_iv(9, 3).unwrap();
        assert_eq!((g.degree(1), g.degree(6)), (7, 4));
        assert_eq!(g.adjacent(1, 6), Ok(false));
        assert!(gen_family_iv(6, 1).is_err());
    }

    #[test]
    fn family_v_layout() {
        // a=0, b=1, c=2: x = 4 sees A_y = {2,3}; y = 5 sees A_x = {1}.
        let g = gen_family_v(5, 0, 1, 2).unwrap();
        assert_eq!(g.neighbors(4), &[2, 3]);
        assert_eq!(g.neighbors(5), &[1]);
        assert_eq!(sorted_degrees(&g), vec![3, 3, 3, 2, 1]);

        let g = gen_family_v(5, 3, 0, 0).unwrap();
        assert_eq!(g.neighbors(4), &[1, 2, 3]);
        assert_eq!(g.neighbors(5), &[1, 2, 3]);

        assert!(gen_family_v(6, 1, 1, 2).is_err());
        assert!(gen_family_v(5, 0, 3, 0).is_err());
        assert!(gen_family_v(5, 1, 1, 1).is_ok());
        assert!(gen_family_v(5, 1, 1, 0).is_err());
    }

    #[test]
    fn family_v_realizes_p() {
        for spec in FamilySpec::all_up_to(11) {
            if let FamilySpec::V { n, a, b, c } = spec {
                let g = spec.generate().unwrap();
                let p = g.degrees().iter().filter(|&&d| d == n - 1).count();
                let (x, y) = (n - 1, n);
                assert_eq!(g.degree(x) + g.degree(y), 2 * a + b + c);
                if b + c > 0 {
                    assert_eq!(p, a, "{spec:?}");
                }
            }
        }
    }

    #[test]
    fn random_graphs_are_deterministic() {
        let a = gen_random_graph(6, 0.5, 1).unwrap();
        assert_eq!(a, gen_random_graph(6, 0.5, 1).unwrap());
        assert_eq!(
            gen_random_graph(4, 0.0, 0).unwrap().strip_isolated().0,
            Graph::empty(0)
        );
        assert!(gen_random_graph(4, 1.5, 0).is_err());
    }

    #[test]
    fn random_split_has_no_isolated_vertices() {
        for seed in 0..50 {
            let g = gen_random_split(5, 3, 0.5, seed).unwrap();
            assert_eq!(g.isolated_vertices().count(), 0);
            assert!(crate::split::split_partition(&g).is_some());
        }
        assert!(gen_random_split(5, 5, 0.5, 0).is_err());
        assert!(gen_random_split(5, 0, 0.5, 0).is_err());
    }

    #[test]
    fn mutation_is_an_involution() {
        let k4 = gen_complete(4);
        for seed in 0..20 {
            let once = mutate_edge(&k4, seed).unwrap();
            assert_eq!(once.m(), 5);
            assert_eq!(mutate_edge(&once, seed).unwrap(), k4);
        }
        assert!(mutate_edge(&Graph::empty(1), 0).is_err());
    }

    #[test]
    fn pair_order() {
        let pairs: Vec<_> = (0..6).map(|i| pair_at(4, i)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(labeled_graph(4, 0b111111), gen_complete(4));
        assert_eq!(labeled_graph_count(6), 32768);
    }
}
