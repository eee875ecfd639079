//! Hardness constructions for signed Roman domination.
//!
//! Each construction maps a source instance to a graph `G'` and a weight
//! target `k'`, tags every vertex of `G'` with its role, and emits a witness
//! that `G'` lies in the advertised graph class. Forward labelings turn a
//! source solution into a signed Roman dominating function on `G'`.
//!
//! | module     | source problem                       | class witness        |
//! |------------|--------------------------------------|----------------------|
//! | [`split`]  | dominating set on cubic graphs       | split partition      |
//! | [`gadget`] | dominating set                       | bipartition          |
//! | [`mrss`]   | multidimensional relaxed subset sum  | feedback vertex set  |
//! | [`rbds`]   | red-blue dominating set              | vertex cover         |

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{is_forest_after_removal, is_split, is_vertex_cover, Bipartition, SplitPartition};
use crate::graph::{Graph, Vertex};
use crate::srdf::{Label, Labeling};

pub mod gadget;
pub mod mrss;
pub mod oracles;
pub mod rbds;
pub mod split;

pub use gadget::{forward_label_gadget, reduce_ds_gadget, GadgetReduction};
pub use mrss::{forward_label_mrss, mrss_table_labeling, reduce_mrss_to_fvs, MrssInstance, MrssReduction};
pub use oracles::{is_dominating_set, oracle_ds, oracle_mrss, oracle_rbds, ORACLE_CAP};
pub use rbds::{forward_label_rbds, reduce_rbds_to_vc, RbdsInstance, RbdsReduction};
pub use split::{forward_label_split, reduce_ds_cubic_to_split, SplitReduction};

/// Role of one vertex in a reduced graph, e.g. `("A", [3])` or `("Q", [u, i, l])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Role {
    pub tag: String,
    pub indices: Vec<usize>,
}

/// Role of every vertex, indexed by vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexRoleMap {
    roles: Vec<Role>,
}

impl VertexRoleMap {
    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn role(&self, v: Vertex) -> &Role {
        &self.roles[v]
    }

    pub fn tag(&self, v: Vertex) -> &str {
        &self.roles[v].tag
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &Role)> {
        self.roles.iter().enumerate()
    }

    /// All vertices carrying `tag`, ascending.
    pub fn with_tag<'a>(&'a self, tag: &'a str) -> impl Iterator<Item = Vertex> + 'a {
        self.iter().filter(move |(_, r)| r.tag == tag).map(|(v, _)| v)
    }

    /// Vertices carrying `tag` whose first index is `first`.
    pub fn with_tag_at<'a>(&'a self, tag: &'a str, first: usize) -> impl Iterator<Item = Vertex> + 'a {
        self.iter()
            .filter(move |(_, r)| r.tag == tag && r.indices.first() == Some(&first))
            .map(|(v, _)| v)
    }

    pub fn find(&self, tag: &str, indices: &[usize]) -> Option<Vertex> {
        self.roles
            .iter()
            .position(|r| r.tag == tag && r.indices == indices)
    }

    /// Distinct tags in order of first appearance.
    pub fn tags(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.roles {
            if !out.contains(&r.tag.as_str()) {
                out.push(&r.tag);
            }
        }
        out
    }
}

/// Certificate that a reduced graph lies in the target class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructureWitness {
    Split(SplitPartition),
    Bipartition(Bipartition),
    FeedbackVertexSet { vertices: Vec<Vertex> },
    VertexCover { vertices: Vec<Vertex> },
}

impl StructureWitness {
    pub fn validates(&self, g: &Graph) -> bool {
        match self {
            StructureWitness::Split(p) => is_split(g, p).unwrap_or(false),
            StructureWitness::Bipartition(b) => b.validates(g),
            StructureWitness::FeedbackVertexSet { vertices } => {
                vertices.iter().all(|&v| v < g.n()) && is_forest_after_removal(g, vertices)
            }
            StructureWitness::VertexCover { vertices } => {
                vertices.iter().all(|&v| v < g.n()) && is_vertex_cover(g, vertices)
            }
        }
    }

    /// Size of the removed set for FVS/VC witnesses.
    pub fn deletion_size(&self) -> Option<usize> {
        match self {
            StructureWitness::FeedbackVertexSet { vertices } | StructureWitness::VertexCover { vertices } => {
                Some(vertices.len())
            }
            _ => None,
        }
    }
}

/// Reduced instance `(G', k')` with its role map and class witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub k_prime: i64,
    pub roles: VertexRoleMap,
    /// Absent only when the construction does not guarantee the class
    /// (the gadget reduction on a non-bipartite source).
    pub witness: Option<StructureWitness>,
}

impl ReductionOutput {
    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            k_prime: self.k_prime,
            roles: self.roles.clone(),
            witness: self.witness.clone(),
        }
    }

    /// Sum of labels over all vertices tagged `tag`.
    pub fn weight_of_tag(&self, f: &Labeling, tag: &str) -> i64 {
        f.weight_of(self.roles.with_tag(tag))
    }
}

/// Everything about a reduced instance except the graph itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub k_prime: i64,
    pub roles: VertexRoleMap,
    pub witness: Option<StructureWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("source graph is not cubic")]
    NotCubic,
    #[error("k = {k} outside the allowed range {min}..={max}")]
    KOutOfRange { k: i64, min: i64, max: i64 },
    #[error("vertex {0} of the source graph is isolated")]
    IsolatedVertex(Vertex),
    #[error("vertex {vertex} out of range for {n} source vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the given set does not dominate the source graph")]
    NotDominating,
    #[error("solution has {size} elements, budget is {budget}")]
    OverBudget { size: usize, budget: usize },
    #[error("MRSS instance: {0}")]
    Mrss(String),
    #[error("the chosen vectors do not reach the target in coordinate {0}")]
    TargetNotMet(usize),
    #[error("RBDS instance: {0}")]
    Rbds(String),
    #[error("oracle limited to {cap} elements, got {n}")]
    CapExceeded { n: usize, cap: usize },
}

/// Incremental construction of a tagged graph.
#[derive(Debug, Default)]
pub(crate) struct Builder {
    roles: Vec<Role>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    pub(crate) fn add(&mut self, tag: &str, indices: &[usize]) -> Vertex {
        self.roles.push(Role {
            tag: tag.to_string(),
            indices: indices.to_vec(),
        });
        self.roles.len() - 1
    }

    pub(crate) fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    pub(crate) fn n(&self) -> usize {
        self.roles.len()
    }

    pub(crate) fn finish(self) -> (Graph, VertexRoleMap) {
        let g = Graph::from_edges(self.roles.len(), self.edges).expect("constructions emit simple graphs");
        (g, VertexRoleMap { roles: self.roles })
    }
}

/// Builds a labeling by mapping each vertex's role to a label.
pub(crate) fn label_by_role(roles: &VertexRoleMap, mut rule: impl FnMut(&Role) -> Label) -> Labeling {
    Labeling::new(roles.roles.iter().map(&mut rule).collect())
}

/// Sorted, deduplicated copy of a source vertex set, checked against `n`.
pub(crate) fn normalize_set(set: &[usize], n: usize) -> Result<Vec<usize>, ReductionError> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&v| v >= n) {
        return Err(ReductionError::VertexOutOfRange { vertex: bad, n });
    }
    Ok(s)
}
