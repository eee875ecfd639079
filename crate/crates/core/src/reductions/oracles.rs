//! Exhaustive solvers for the source problems, used as test oracles.

use itertools::Itertools;

use super::{MrssInstance, RbdsInstance, ReductionError};
use crate::graph::{Graph, Vertex};

/// Largest instance any oracle accepts.
pub const ORACLE_CAP: usize = 20;

fn check_cap(n: usize) -> Result<(), ReductionError> {
    if n > ORACLE_CAP {
        Err(ReductionError::CapExceeded { n, cap: ORACLE_CAP })
    } else {
        Ok(())
    }
}

pub fn is_dominating_set(g: &Graph, set: &[Vertex]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return false;
        }
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Lexicographically first among the smallest subsets of `0..n` satisfying
/// `ok`, if one of size at most `budget` exists.
fn smallest_subset(n: usize, budget: usize, mut ok: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    (0..=budget.min(n)).find_map(|size| (0..n).combinations(size).find(|c| ok(c)))
}

/// Smallest dominating set of `g` if its size is at most `k`.
pub fn oracle_ds(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>, ReductionError> {
    check_cap(g.n())?;
    let closed: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |acc, &w| acc | 1 << w))
        .collect();
    let full = (1u32 << g.n()) - 1;
    Ok(smallest_subset(g.n(), k, |s| {
        s.iter().fold(0, |acc, &v| acc | closed[v]) == full
    }))
}

/// Smallest subset of `X` dominating all of `Y`, if its size is at most `k`.
pub fn oracle_rbds(inst: &RbdsInstance) -> Result<Option<Vec<usize>>, ReductionError> {
    check_cap(inst.x_count)?;
    check_cap(inst.y_count)?;
    let mut reach = vec![0u64; inst.x_count];
    for &(x, y) in &inst.edges {
        reach[x] |= 1 << y;
    }
    let full = (1u64 << inst.y_count) - 1;
    Ok(smallest_subset(inst.x_count, inst.k, |s| {
        s.iter().fold(0, |acc, &x| acc | reach[x]) == full
    }))
}

/// Smallest index set `S'` with `|S'| ≤ m` whose vector sum dominates the
/// target coordinatewise, if any.
pub fn oracle_mrss(inst: &MrssInstance) -> Result<Option<Vec<usize>>, ReductionError> {
    check_cap(inst.vectors.len())?;
    Ok(smallest_subset(inst.vectors.len(), inst.m, |s| inst.covers(s)))
}
