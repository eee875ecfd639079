//! Graph-class recognizers and structure-witness validators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("vertex {0} appears on both sides of the partition")]
    Overlap(Vertex),
    #[error("vertex {0} is not covered by the partition")]
    Uncovered(Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
}

/// Split partition: `clique` must induce a clique, `independent` an independent set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Two-colouring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

impl Bipartition {
    /// Whether every edge crosses the two sides and the sides partition the vertices.
    pub fn validates(&self, g: &Graph) -> bool {
        let Ok(side) = side_map(g.n(), &self.left, &self.right) else {
            return false;
        };
        g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }
}

fn side_map(n: usize, first: &[Vertex], second: &[Vertex]) -> Result<Vec<bool>, WitnessError> {
    let mut side: Vec<Option<bool>> = vec![None; n];
    for (flag, part) in [(true, first), (false, second)] {
        for &v in part {
            if v >= n {
                return Err(WitnessError::OutOfRange { vertex: v, n });
            }
            if side[v].is_some() {
                return Err(WitnessError::Overlap(v));
            }
            side[v] = Some(flag);
        }
    }
    side.into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or(WitnessError::Uncovered(v)))
        .collect()
}

/// Checks whether `witness` is a split partition of `g`.
pub fn is_split(g: &Graph, witness: &SplitPartition) -> Result<bool, WitnessError> {
    let in_clique = side_map(g.n(), &witness.clique, &witness.independent)?;
    let clique_ok = witness.clique.iter().enumerate().all(|(i, &u)| {
        witness.clique[i + 1..]
            .iter()
            .all(|&v| g.has_edge(u, v))
    });
    let independent_ok = g
        .edges()
        .iter()
        .all(|&(u, v)| in_clique[u] || in_clique[v]);
    Ok(clique_ok && independent_ok)
}

/// Two-colours `g` by breadth-first search, or returns `None` on an odd cycle.
///
/// The smallest vertex of each component goes to `left`.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for start in g.vertices() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(true);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, c) in colour.into_iter().enumerate() {
        if c == Some(true) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(Bipartition { left, right })
}

pub fn is_regular(g: &Graph, r: usize) -> bool {
    g.vertices().all(|u| g.degree(u) == r)
}

fn removal_mask(g: &Graph, removed: &[Vertex]) -> Vec<bool> {
    let mut mask = vec![false; g.n()];
    for &v in removed {
        if v < g.n() {
            mask[v] = true;
        }
    }
    mask
}

/// Whether deleting `removed` leaves an acyclic graph (a feedback vertex set check).
pub fn is_forest_after_removal(g: &Graph, removed: &[Vertex]) -> bool {
    let gone = removal_mask(g, removed);
    // Union-find over surviving edges; any edge inside one tree closes a cycle.
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in g.edges() {
        if gone[u] || gone[v] {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Whether every edge touches `cover` (so deleting it leaves an independent set).
pub fn is_vertex_cover(g: &Graph, cover: &[Vertex]) -> bool {
    let inside = removal_mask(g, cover);
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
}
