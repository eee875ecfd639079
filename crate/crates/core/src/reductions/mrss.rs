//! Multidimensional relaxed subset sum to signed Roman domination on graphs
//! with a small feedback vertex set.
//!
//! Per coordinate `j`: vertices `u_j`, `v_j` with pendants `r1_j`, `r2_j`; a set
//! `D_j` of `Σ_i s_i(j) + t(j)` vertices joined to both; a set `F_j` of half
//! that many (rounded up) joined to `v_j`, each with two pendants `PF`.
//!
//! Per vector `s_i`, with `M = max(s_i)`: a hub `a_i` and `M` edges `b^l c^l`
//! with `a_i` joined to every `b^l`; four pendants `Z` and a path `b w x y` on
//! each `b^l`; two paths `c g h` and `c p q` on each `c^l`. `u_j` is joined to
//! the first `s_i(j)` vertices `c^0, c^1, …`.
//!
//! Deleting every `u_j` and `v_j` leaves a forest.

use serde::{Deserialize, Serialize};

use super::{label_by_role, Builder, ReductionError, ReductionOutput, StructureWitness};
use crate::srdf::{Label, Labeling};

/// `S = vectors`, `t = target`, dimension `k`, cardinality budget `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MrssInstance {
    pub k: usize,
    pub m: usize,
    pub vectors: Vec<Vec<u64>>,
    pub target: Vec<u64>,
}

impl MrssInstance {
    /// Checks lengths only; the reduction additionally needs nonzero vectors
    /// and a positive target.
    pub fn check_shape(&self) -> Result<(), ReductionError> {
        if self.target.len() != self.k {
            return Err(ReductionError::Mrss(format!(
                "target has {} coordinates, expected {}",
                self.target.len(),
                self.k
            )));
        }
        if let Some(i) = self.vectors.iter().position(|s| s.len() != self.k) {
            return Err(ReductionError::Mrss(format!(
                "vector {i} has {} coordinates, expected {}",
                self.vectors[i].len(),
                self.k
            )));
        }
        Ok(())
    }

    /// Whether the vectors indexed by `chosen` sum to at least the target.
    pub fn covers(&self, chosen: &[usize]) -> bool {
        self.first_short_coordinate(chosen).is_none()
    }

    fn first_short_coordinate(&self, chosen: &[usize]) -> Option<usize> {
        (0..self.k).find(|&j| chosen.iter().map(|&i| self.vectors[i][j]).sum::<u64>() < self.target[j])
    }

    pub fn max_coordinate(&self, i: usize) -> usize {
        self.vectors[i].iter().copied().max().unwrap_or(0) as usize
    }

    /// `Σ_i s_i(j) + t(j)`, the size of `D_j`.
    pub fn column_total(&self, j: usize) -> usize {
        (self.vectors.iter().map(|s| s[j]).sum::<u64>() + self.target[j]) as usize
    }

    /// `Σ_i (3·max(s_i) + 1) − Σ_j (Σ_i s_i(j) + t(j)) + 2k + m`.
    pub fn k_prime(&self) -> i64 {
        let vectors: i64 = (0..self.vectors.len())
            .map(|i| 3 * self.max_coordinate(i) as i64 + 1)
            .sum();
        let columns: i64 = (0..self.k).map(|j| self.column_total(j) as i64).sum();
        vectors - columns + 2 * self.k as i64 + self.m as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrssReduction {
    pub instance: MrssInstance,
    pub output: ReductionOutput,
}

pub fn reduce_mrss_to_fvs(inst: &MrssInstance) -> Result<MrssReduction, ReductionError> {
    inst.check_shape()?;
    if let Some(j) = inst.target.iter().position(|&t| t == 0) {
        return Err(ReductionError::Mrss(format!("target coordinate {j} is zero")));
    }
    if let Some(i) = inst.vectors.iter().position(|s| s.iter().all(|&c| c == 0)) {
        return Err(ReductionError::Mrss(format!("vector {i} is zero")));
    }

    let mut b = Builder::default();
    let mut u = Vec::with_capacity(inst.k);
    let mut fvs = Vec::with_capacity(2 * inst.k);
    for j in 0..inst.k {
        let uj = b.add("u", &[j]);
        let vj = b.add("v", &[j]);
        let r1 = b.add("r1", &[j]);
        let r2 = b.add("r2", &[j]);
        b.edge(uj, r1);
        b.edge(vj, r2);
        let total = inst.column_total(j);
        for l in 0..total {
            let d = b.add("D", &[j, l]);
            b.edge(uj, d);
            b.edge(vj, d);
        }
        for l in 0..total.div_ceil(2) {
            let f = b.add("F", &[j, l]);
            b.edge(vj, f);
            for p in 0..2 {
                let pend = b.add("PF", &[j, l, p]);
                b.edge(f, pend);
            }
        }
        u.push(uj);
        fvs.extend([uj, vj]);
    }
    for (i, s) in inst.vectors.iter().enumerate() {
        let a = b.add("a", &[i]);
        let mut c_vertices = Vec::new();
        for l in 0..inst.max_coordinate(i) {
            let bl = b.add("b", &[i, l]);
            let cl = b.add("c", &[i, l]);
            b.edge(a, bl);
            b.edge(bl, cl);
            for p in 0..4 {
                let z = b.add("Z", &[i, l, p]);
                b.edge(bl, z);
            }
            let w = b.add("w", &[i, l]);
            let x = b.add("x", &[i, l]);
            let y = b.add("y", &[i, l]);
            b.edge(bl, w);
            b.edge(w, x);
            b.edge(x, y);
            let g = b.add("g", &[i, l]);
            let h = b.add("h", &[i, l]);
            let p = b.add("p", &[i, l]);
            let q = b.add("q", &[i, l]);
            b.edge(cl, g);
            b.edge(g, h);
            b.edge(cl, p);
            b.edge(p, q);
            c_vertices.push(cl);
        }
        for (j, &count) in s.iter().enumerate() {
            for &cl in &c_vertices[..count as usize] {
                b.edge(u[j], cl);
            }
        }
    }

    let (graph, roles) = b.finish();
    let witness = StructureWitness::FeedbackVertexSet { vertices: fvs };
    debug_assert!(witness.validates(&graph));
    Ok(MrssReduction {
        instance: inst.clone(),
        output: ReductionOutput {
            graph,
            k_prime: inst.k_prime(),
            roles,
            witness: Some(witness),
        },
    })
}

/// The forward labeling for an arbitrary index set, without checking that it
/// solves the instance. Its weight is `k' − m + |S'|`.
pub fn mrss_table_labeling(red: &MrssReduction, chosen: &[usize]) -> Labeling {
    let mut inside = vec![false; red.instance.vectors.len()];
    for &i in chosen {
        inside[i] = true;
    }
    label_by_role(&red.output.roles, |r| {
        let picked = || inside[r.indices[0]];
        match r.tag.as_str() {
            "PF" | "D" | "r1" | "r2" | "h" | "q" | "Z" => Label::Minus,
            "F" | "u" | "v" | "b" | "g" | "p" => Label::Two,
            "w" if picked() => Label::Minus,
            "w" => Label::One,
            "x" if picked() => Label::One,
            "x" => Label::Two,
            "y" if picked() => Label::One,
            "y" => Label::Minus,
            "a" | "c" if picked() => Label::Two,
            "a" | "c" => Label::One,
            other => unreachable!("unknown role {other}"),
        }
    })
}

/// Forward labeling for a solution `S'` with `|S'| ≤ m` and `Σ_{S'} s_i ≥ t`.
pub fn forward_label_mrss(red: &MrssReduction, chosen: &[usize]) -> Result<Labeling, ReductionError> {
    let inst = &red.instance;
    let s = super::normalize_set(chosen, inst.vectors.len())?;
    if s.len() > inst.m {
        return Err(ReductionError::OverBudget {
            size: s.len(),
            budget: inst.m,
        });
    }
    if let Some(j) = inst.first_short_coordinate(&s) {
        return Err(ReductionError::TargetNotMet(j));
    }
    Ok(mrss_table_labeling(red, &s))
}
