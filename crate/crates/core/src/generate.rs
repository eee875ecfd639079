//! Deterministic graph generators for test corpora.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classes::SplitPartition;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `[n]`
    Path,
    /// `[n]`, n >= 3
    Cycle,
    /// `[n]`
    Complete,
    /// `[a, b]`
    CompleteBipartite,
    /// `[sizes...]`
    CompleteMultipartite,
    /// `[leaves]`, centre is vertex 0
    Star,
    /// `[spokes]`, spokes >= 3, hub is vertex 0
    Wheel,
    /// `[n, percent]`, edge probability `percent / 100`
    RandomGnp,
    /// `[n]`, n even and >= 4
    RandomCubic,
    /// `[clique, independent, percent]`
    RandomSplit,
    /// `[n]`, random recursive tree over a shuffled vertex order
    RandomTree,
}

impl GraphKind {
    pub const ALL: [GraphKind; 11] = [
        GraphKind::Path,
        GraphKind::Cycle,
        GraphKind::Complete,
        GraphKind::CompleteBipartite,
        GraphKind::CompleteMultipartite,
        GraphKind::Star,
        GraphKind::Wheel,
        GraphKind::RandomGnp,
        GraphKind::RandomCubic,
        GraphKind::RandomSplit,
        GraphKind::RandomTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Complete => "complete",
            GraphKind::CompleteBipartite => "complete_bipartite",
            GraphKind::CompleteMultipartite => "complete_multipartite",
            GraphKind::Star => "star",
            GraphKind::Wheel => "wheel",
            GraphKind::RandomGnp => "random_gnp",
            GraphKind::RandomCubic => "random_cubic",
            GraphKind::RandomSplit => "random_split",
            GraphKind::RandomTree => "random_tree",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GenerateError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unknown graph kind `{0}`")]
    UnknownKind(String),
    #[error("{kind} expects {expected}, got {got:?}")]
    BadParams {
        kind: GraphKind,
        expected: &'static str,
        got: Vec<usize>,
    },
    #[error("random_cubic needs an even vertex count >= 4, got {0}")]
    CubicParity(usize),
    #[error("random_cubic gave up after {0} attempts")]
    CubicAttempts(usize),
}

const CUBIC_ATTEMPTS: usize = 10_000;

fn rng(seed: Option<u64>) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.unwrap_or(0))
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generators emit simple graphs")
}

/// Generates a graph of the requested family. Random kinds are a pure
/// function of `(params, seed)`; a missing seed means seed 0.
pub fn generate(kind: GraphKind, params: &[usize], seed: Option<u64>) -> Result<Graph, GenerateError> {
    let bad = |expected: &'static str| GenerateError::BadParams {
        kind,
        expected,
        got: params.to_vec(),
    };
    match (kind, params) {
        (GraphKind::Path, &[n]) => Ok(build(n, (1..n).map(|i| (i - 1, i)).collect())),
        (GraphKind::Cycle, &[n]) if n >= 3 => Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())),
        (GraphKind::Cycle, _) => Err(bad("[n] with n >= 3")),
        (GraphKind::Complete, &[n]) => Ok(complete_multipartite(&vec![1; n])),
        (GraphKind::CompleteBipartite, &[a, b]) => Ok(complete_multipartite(&[a, b])),
        (GraphKind::CompleteMultipartite, sizes) => Ok(complete_multipartite(sizes)),
        (GraphKind::Star, &[leaves]) => Ok(build(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())),
        (GraphKind::Wheel, &[spokes]) if spokes >= 3 => {
            let mut edges: Vec<_> = (1..=spokes).map(|i| (0, i)).collect();
            edges.extend((1..=spokes).map(|i| (i, i % spokes + 1)));
            Ok(build(spokes + 1, edges))
        }
        (GraphKind::Wheel, _) => Err(bad("[spokes] with spokes >= 3")),
        (GraphKind::RandomGnp, &[n, percent]) if percent <= 100 => {
            let mut rng = rng(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_range(0..100) < percent {
                        edges.push((u, v));
                    }
                }
            }
            Ok(build(n, edges))
        }
        (GraphKind::RandomGnp, _) => Err(bad("[n, percent] with percent <= 100")),
        (GraphKind::RandomCubic, &[n]) => random_cubic(n, seed),
        (GraphKind::RandomSplit, &[clique, independent, percent]) if percent <= 100 => {
            Ok(random_split(clique, independent, percent, seed).0)
        }
        (GraphKind::RandomSplit, _) => Err(bad("[clique, independent, percent] with percent <= 100")),
        (GraphKind::RandomTree, &[n]) => Ok(random_tree(n, seed)),
        (GraphKind::Path | GraphKind::Complete | GraphKind::Star | GraphKind::RandomTree | GraphKind::RandomCubic, _) => {
            Err(bad("[n]"))
        }
        (GraphKind::CompleteBipartite, _) => Err(bad("[a, b]")),
    }
}

/// Complete multipartite graph; part `i` occupies a contiguous index range.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n = sizes.iter().sum();
    let part_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Superimposes three random perfect matchings, rejecting any attempt that
/// produces a repeated edge.
fn random_cubic(n: usize, seed: Option<u64>) -> Result<Graph, GenerateError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenerateError::CubicParity(n));
    }
    let mut rng = rng(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    'attempt: for _ in 0..CUBIC_ATTEMPTS {
        let mut edges = std::collections::BTreeSet::new();
        for _ in 0..3 {
            order.shuffle(&mut rng);
            for pair in order.chunks_exact(2) {
                let e = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if !edges.insert(e) {
                    continue 'attempt;
                }
            }
        }
        return Ok(build(n, edges.into_iter().collect()));
    }
    Err(GenerateError::CubicAttempts(CUBIC_ATTEMPTS))
}

/// Random split graph with its witness: vertices `0..clique` form the clique,
/// the rest are independent, and each cross pair is an edge with the given
/// probability.
pub fn random_split(
    clique: usize,
    independent: usize,
    percent: usize,
    seed: Option<u64>,
) -> (Graph, SplitPartition) {
    let mut rng = rng(seed);
    let n = clique + independent;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in (u + 1)..clique {
            edges.push((u, v));
        }
    }
    for v in clique..n {
        for u in 0..clique {
            if rng.gen_range(0..100) < percent {
                edges.push((u, v));
            }
        }
    }
    (
        build(n, edges),
        SplitPartition {
            clique: (0..clique).collect(),
            independent: (clique..n).collect(),
        },
    )
}

/// Each vertex of a shuffled order attaches to a uniformly random earlier one.
fn random_tree(n: usize, seed: Option<u64>) -> Graph {
    let mut rng = rng(seed);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(&mut rng);
    let edges = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    build(n, edges)
}
