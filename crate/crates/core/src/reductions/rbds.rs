//! Red-blue dominating set to signed Roman domination on graphs with a small
//! vertex cover.
//!
//! Copies `X1, X2, X3` of `X` and `Y1, Y2` of `Y`; `Y1^u` is joined to the
//! `X1` and `X2` copies of `N(u)`, `Y2^u` to the `X2` and `X3` copies; every
//! `Y` copy gets three pendants. `k' = −2|Y| − |X| + 4k`, and `Y1 ∪ Y2` is a
//! vertex cover.

use std::fmt::Write as _;

use thiserror::Error;

use super::{label_by_role, normalize_set, Builder, ReductionError, ReductionOutput, StructureWitness};
use crate::srdf::{Label, Labeling};

/// Bipartite source instance; `edges` are `(x, y)` pairs, 0-indexed per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    pub x_count: usize,
    pub y_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RbdsParseError {
    #[error("line {line}: expected `p <|X|> <|Y|> <m> <k>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: second header line")]
    DuplicateHeader { line: usize },
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("line {line}: expected `e <x> <y>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: unrecognized line")]
    UnknownLine { line: usize },
    #[error("line {line}: endpoint out of range")]
    OutOfRange { line: usize },
    #[error("line {line}: repeated edge")]
    DuplicateEdge { line: usize },
    #[error("header declares {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

impl RbdsInstance {
    /// Builds an instance and checks that no vertex on either side is isolated.
    pub fn new(x_count: usize, y_count: usize, edges: Vec<(usize, usize)>, k: usize) -> Result<Self, ReductionError> {
        let inst = Self::new_unchecked(x_count, y_count, edges, k);
        inst.check()?;
        Ok(inst)
    }

    pub fn new_unchecked(x_count: usize, y_count: usize, edges: Vec<(usize, usize)>, k: usize) -> Self {
        Self {
            x_count,
            y_count,
            edges,
            k,
        }
    }

    /// Preconditions of the reduction: endpoints in range, no repeated edge,
    /// no isolated vertex on either side, `1 ≤ k ≤ |X|`.
    pub fn check(&self) -> Result<(), ReductionError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut x_deg = vec![0usize; self.x_count];
        let mut y_deg = vec![0usize; self.y_count];
        for &(x, y) in &self.edges {
            if x >= self.x_count || y >= self.y_count {
                return Err(ReductionError::Rbds(format!("edge ({x}, {y}) out of range")));
            }
            if !seen.insert((x, y)) {
                return Err(ReductionError::Rbds(format!("edge ({x}, {y}) repeated")));
            }
            x_deg[x] += 1;
            y_deg[y] += 1;
        }
        if let Some(x) = x_deg.iter().position(|&d| d == 0) {
            return Err(ReductionError::Rbds(format!("X vertex {x} has no neighbour")));
        }
        if let Some(y) = y_deg.iter().position(|&d| d == 0) {
            return Err(ReductionError::Rbds(format!("Y vertex {y} has no neighbour")));
        }
        if self.k < 1 || self.k > self.x_count {
            return Err(ReductionError::KOutOfRange {
                k: self.k as i64,
                min: 1,
                max: self.x_count as i64,
            });
        }
        Ok(())
    }

    /// Neighbours in `X` of each `Y` vertex, ascending.
    pub fn y_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.y_count];
        for &(x, y) in &self.edges {
            out[y].push(x);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        out
    }

    pub fn dominates(&self, set: &[usize]) -> bool {
        let mut hit = vec![false; self.y_count];
        for &(x, y) in &self.edges {
            if set.contains(&x) {
                hit[y] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// `p <|X|> <|Y|> <m> <k>` followed by `e <x> <y>` lines, 1-indexed.
    pub fn parse(text: &str) -> Result<Self, RbdsParseError> {
        let mut header: Option<(usize, usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let nums = |parts: std::str::SplitWhitespace| -> Option<Vec<usize>> {
                parts.map(|p| p.parse().ok()).collect()
            };
            match parts.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(RbdsParseError::DuplicateHeader { line });
                    }
                    match nums(parts).as_deref() {
                        Some(&[x, y, m, k]) => header = Some((x, y, m, k)),
                        _ => return Err(RbdsParseError::MalformedHeader { line }),
                    }
                }
                Some("e") => {
                    let (xc, yc, _, _) = header.ok_or(RbdsParseError::MissingHeader)?;
                    let (x, y) = match nums(parts).as_deref() {
                        Some(&[x, y]) => (x, y),
                        _ => return Err(RbdsParseError::MalformedEdge { line }),
                    };
                    if x == 0 || y == 0 || x > xc || y > yc {
                        return Err(RbdsParseError::OutOfRange { line });
                    }
                    if !seen.insert((x, y)) {
                        return Err(RbdsParseError::DuplicateEdge { line });
                    }
                    edges.push((x - 1, y - 1));
                }
                _ => return Err(RbdsParseError::UnknownLine { line }),
            }
        }
        let (x_count, y_count, m, k) = header.ok_or(RbdsParseError::MissingHeader)?;
        if m != edges.len() {
            return Err(RbdsParseError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Self::new_unchecked(x_count, y_count, edges, k))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {} {} {}\n", self.x_count, self.y_count, self.edges.len(), self.k);
        for &(x, y) in &self.edges {
            writeln!(out, "e {} {}", x + 1, y + 1).expect("writing to a String");
        }
        out
    }

    pub fn k_prime(&self) -> i64 {
        -2 * self.y_count as i64 - self.x_count as i64 + 4 * self.k as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsReduction {
    pub instance: RbdsInstance,
    pub output: ReductionOutput,
}

pub fn reduce_rbds_to_vc(inst: &RbdsInstance) -> Result<RbdsReduction, ReductionError> {
    inst.check()?;
    let mut b = Builder::default();
    let copies: Vec<Vec<usize>> = ["X1", "X2", "X3"]
        .iter()
        .map(|tag| (0..inst.x_count).map(|v| b.add(tag, &[v])).collect())
        .collect();
    let nbrs = inst.y_neighbours();
    let mut cover = Vec::with_capacity(2 * inst.y_count);
    for (side, (ytag, ptag)) in [("Y1", "P1"), ("Y2", "P2")].into_iter().enumerate() {
        for (u, xs) in nbrs.iter().enumerate() {
            let yu = b.add(ytag, &[u]);
            for &x in xs {
                b.edge(yu, copies[side][x]);
                b.edge(yu, copies[side + 1][x]);
            }
            for l in 0..3 {
                let p = b.add(ptag, &[u, l]);
                b.edge(yu, p);
            }
            cover.push(yu);
        }
    }
    let (graph, roles) = b.finish();
    let witness = StructureWitness::VertexCover { vertices: cover };
    debug_assert!(witness.validates(&graph));
    Ok(RbdsReduction {
        instance: inst.clone(),
        output: ReductionOutput {
            graph,
            k_prime: inst.k_prime(),
            roles,
            witness: Some(witness),
        },
    })
}

/// Pendants and `X1/X3` copies outside `S` → −1; `X2` and `X1/X3` copies in
/// `S` → 1; `Y1, Y2` → 2.
pub fn forward_label_rbds(red: &RbdsReduction, set: &[usize]) -> Result<Labeling, ReductionError> {
    let inst = &red.instance;
    let s = normalize_set(set, inst.x_count)?;
    if !inst.dominates(&s) {
        return Err(ReductionError::NotDominating);
    }
    if s.len() > inst.k {
        return Err(ReductionError::OverBudget {
            size: s.len(),
            budget: inst.k,
        });
    }
    let mut chosen = vec![false; inst.x_count];
    for &v in &s {
        chosen[v] = true;
    }
    Ok(label_by_role(&red.output.roles, |r| match r.tag.as_str() {
        "Y1" | "Y2" => Label::Two,
        "X2" => Label::One,
        "X1" | "X3" if chosen[r.indices[0]] => Label::One,
        _ => Label::Minus,
    }))
}
