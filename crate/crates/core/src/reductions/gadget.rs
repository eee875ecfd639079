//! Dominating set to signed Roman domination with a solution-size target.
//!
//! The source graph is kept as is, and every source vertex `v` receives
//! `D = d(v) + 1` paths `x_i y_i z_i` with `x_i` adjacent to `v`, two pendants
//! `Q_i` on each `z_i`, two pendants `R` on `y_0` and one pendant `r_i` on
//! each other `y_i`.
//! The target is `k' = k`. Bipartite sources give bipartite outputs.

use super::{label_by_role, normalize_set, Builder, ReductionError, ReductionOutput, StructureWitness};
use crate::classes::{is_bipartite, Bipartition};
use crate::graph::Graph;
use crate::reductions::oracles::is_dominating_set;
use crate::srdf::{Label, Labeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReduction {
    pub source: Graph,
    pub k: usize,
    pub output: ReductionOutput,
}

/// Vertices one gadget adds for a source vertex of degree `d`.
pub fn gadget_size(d: usize) -> usize {
    let paths = d + 1;
    // x, y, z and two Q per path; two R on y_0; one r on every other y.
    5 * paths + 2 + (paths - 1)
}

pub fn reduce_ds_gadget(g: &Graph, k: usize) -> Result<GadgetReduction, ReductionError> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(ReductionError::KOutOfRange {
            k: k as i64,
            min: 1,
            max: n as i64,
        });
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(ReductionError::IsolatedVertex(v));
    }
    let mut b = Builder::default();
    for u in 0..n {
        b.add("v", &[u]);
    }
    for &(u, v) in g.edges() {
        b.edge(u, v);
    }
    // Side of each new vertex relative to its source vertex: true = same side.
    let mut same_side: Vec<(usize, usize, bool)> = Vec::new();
    for u in 0..n {
        for i in 0..=g.degree(u) {
            let x = b.add("x", &[u, i]);
            let y = b.add("y", &[u, i]);
            let z = b.add("z", &[u, i]);
            b.edge(u, x);
            b.edge(x, y);
            b.edge(y, z);
            same_side.extend([(x, u, false), (y, u, true), (z, u, false)]);
            for l in 0..2 {
                let q = b.add("Q", &[u, i, l]);
                b.edge(z, q);
                same_side.push((q, u, true));
            }
            if i == 0 {
                for l in 0..2 {
                    let r = b.add("R", &[u, l]);
                    b.edge(y, r);
                    same_side.push((r, u, false));
                }
            } else {
                let r = b.add("r", &[u, i]);
                b.edge(y, r);
                same_side.push((r, u, false));
            }
        }
    }
    let total = b.n();
    let (graph, roles) = b.finish();

    let witness = is_bipartite(g).map(|src| {
        let mut left = vec![false; total];
        for &v in &src.left {
            left[v] = true;
        }
        for &(w, u, same) in &same_side {
            left[w] = left[u] == same;
        }
        let (l, r): (Vec<usize>, Vec<usize>) = (0..total).partition(|&v| left[v]);
        StructureWitness::Bipartition(Bipartition { left: l, right: r })
    });
    debug_assert!(witness.as_ref().is_none_or(|w| w.validates(&graph)));

    Ok(GadgetReduction {
        source: g.clone(),
        k,
        output: ReductionOutput {
            graph,
            k_prime: k as i64,
            roles,
            witness,
        },
    })
}

/// `x` and all pendants → −1; `y, z` and `S` → 2; other source vertices → 1.
pub fn forward_label_gadget(red: &GadgetReduction, set: &[usize]) -> Result<Labeling, ReductionError> {
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
        "v" if chosen[r.indices[0]] => Label::Two,
        "v" => Label::One,
        "y" | "z" => Label::Two,
        _ => Label::Minus,
    }))
}
