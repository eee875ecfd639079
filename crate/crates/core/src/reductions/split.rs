//! Dominating set on cubic graphs to signed Roman domination on split graphs.
//!
//! Five copies `A, B, C, D, X` of `V(G)` and three sets `E, Y, Z` of size
//! `⌈(2n − k + 4)/2⌉`. `a_i x_j` is an edge iff `u_i ∈ N_G(u_j)`; `x_i` is
//! joined to `a_i, b_i, c_i, d_i`; `e_i` to `y_i, z_i`; and `A ∪ B ∪ C ∪ D ∪ E`
//! is a clique. The target is `k' = k − 3n`.
//!
//! Vertex layout: `A, B, C, D, X` (each `n` vertices, in source order), then
//! `E, Y, Z` (each `s` vertices).

use super::{label_by_role, normalize_set, Builder, ReductionError, ReductionOutput, StructureWitness};
use crate::classes::{is_regular, SplitPartition};
use crate::graph::Graph;
use crate::reductions::oracles::is_dominating_set;
use crate::srdf::{Label, Labeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReduction {
    pub source: Graph,
    pub k: usize,
    pub output: ReductionOutput,
}

impl SplitReduction {
    /// `⌈(2n − k + 4)/2⌉`, the size of each of `E`, `Y` and `Z`.
    pub fn side_size(&self) -> usize {
        side_size(self.source.n(), self.k)
    }
}

fn side_size(n: usize, k: usize) -> usize {
    (2 * n + 4 - k).div_ceil(2)
}

pub fn reduce_ds_cubic_to_split(g: &Graph, k: usize) -> Result<SplitReduction, ReductionError> {
    if !is_regular(g, 3) {
        return Err(ReductionError::NotCubic);
    }
    let n = g.n();
    if k < 1 || k > n {
        return Err(ReductionError::KOutOfRange {
            k: k as i64,
            min: 1,
            max: n as i64,
        });
    }
    let s = side_size(n, k);
    let mut b = Builder::default();
    let copies: Vec<Vec<usize>> = ["A", "B", "C", "D", "X"]
        .iter()
        .map(|tag| (0..n).map(|i| b.add(tag, &[i])).collect())
        .collect();
    let (a, x) = (&copies[0], &copies[4]);
    let sides: Vec<Vec<usize>> = ["E", "Y", "Z"]
        .iter()
        .map(|tag| (0..s).map(|i| b.add(tag, &[i])).collect())
        .collect();
    let (e, y, z) = (&sides[0], &sides[1], &sides[2]);

    for j in 0..n {
        for &i in g.neighbors(j) {
            b.edge(a[i], x[j]);
        }
        for copy in &copies[..4] {
            b.edge(x[j], copy[j]);
        }
    }
    for i in 0..s {
        b.edge(e[i], y[i]);
        b.edge(e[i], z[i]);
    }
    let clique: Vec<usize> = copies[..4].iter().flatten().chain(e).copied().collect();
    for (pos, &u) in clique.iter().enumerate() {
        for &v in &clique[pos + 1..] {
            b.edge(u, v);
        }
    }
    let independent: Vec<usize> = x.iter().chain(y).chain(z).copied().collect();

    let (graph, roles) = b.finish();
    let witness = StructureWitness::Split(SplitPartition { clique, independent });
    debug_assert!(witness.validates(&graph));
    Ok(SplitReduction {
        source: g.clone(),
        k,
        output: ReductionOutput {
            graph,
            k_prime: k as i64 - 3 * n as i64,
            roles,
            witness: Some(witness),
        },
    })
}

/// `B, C, D, X, Y, Z → −1`; `a_i → 2` if `u_i ∈ S`, else 1; `E → 2`.
pub fn forward_label_split(red: &SplitReduction, set: &[usize]) -> Result<Labeling, ReductionError> {
    let s = normalize_set(set, red.source.n())?;
    if !is_dominating_set(&red.source, &s) {
        return Err(ReductionError::NotDominating);
    }
    if s.len() > red.k {
        return Err(ReductionError::OverBudget {
            size: s.len(),
            budget: red.k,
        });
    }
    let mut chosen = vec![false; red.source.n()];
    for &v in &s {
        chosen[v] = true;
    }
    Ok(label_by_role(&red.output.roles, |r| match r.tag.as_str() {
        "A" if chosen[r.indices[0]] => Label::Two,
        "A" => Label::One,
        "E" => Label::Two,
        _ => Label::Minus,
    }))
}
