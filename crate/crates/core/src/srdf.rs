//! Signed Roman dominating functions: labels, validity, weight and the
//! degree-based lower bound on the optimum.
//!
//! A labeling `f: V -> {-1, 1, 2}` is a signed Roman dominating function when
//! every closed neighbourhood sums to at least 1 and every vertex labelled −1
//! has an open neighbour labelled 2.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Label {
    Minus,
    One,
    Two,
}

impl Label {
    /// All labels in the order −1 < 1 < 2.
    pub const ALL: [Label; 3] = [Label::Minus, Label::One, Label::Two];

    pub const fn value(self) -> i64 {
        match self {
            Label::Minus => -1,
            Label::One => 1,
            Label::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid label {0}; labels are -1, 1 or 2")]
pub struct InvalidLabel(pub i64);

impl TryFrom<i64> for Label {
    type Error = InvalidLabel;

    fn try_from(v: i64) -> Result<Self, Self::Error> {
        match v {
            -1 => Ok(Label::Minus),
            1 => Ok(Label::One),
            2 => Ok(Label::Two),
            other => Err(InvalidLabel(other)),
        }
    }
}

impl From<Label> for i64 {
    fn from(l: Label) -> i64 {
        l.value()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Total map vertex → label, indexed by vertex. Serialized as `{"labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Self { labels }
    }

    pub fn uniform(n: usize, label: Label) -> Self {
        Self::new(vec![label; n])
    }

    pub fn from_values(values: &[i64]) -> Result<Self, InvalidLabel> {
        values
            .iter()
            .map(|&v| Label::try_from(v))
            .collect::<Result<_, _>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn set(&mut self, v: Vertex, label: Label) {
        self.labels[v] = label;
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn values(&self) -> Vec<i64> {
        self.labels.iter().map(|l| l.value()).collect()
    }

    /// Sum of labels over `vertices`.
    pub fn weight_of(&self, vertices: impl IntoIterator<Item = Vertex>) -> i64 {
        vertices.into_iter().map(|v| self.labels[v].value()).sum()
    }
}

/// Σ over the closed neighbourhood of `u`.
pub fn labelsum(g: &Graph, f: &Labeling, u: Vertex) -> i64 {
    f.get(u).value() + g.neighbors(u).iter().map(|&v| f.get(v).value()).sum::<i64>()
}

pub fn weight(f: &Labeling) -> i64 {
    f.labels.iter().map(|l| l.value()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    LabelsumBelowOne,
    MinusWithoutTwoNeighbour,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub reason: ViolationReason,
}

/// Outcome of a validity check, listing every failing vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks both domination conditions at every vertex.
///
/// Panics if `f` does not have exactly one label per vertex of `g`.
pub fn is_valid_srdf(g: &Graph, f: &Labeling) -> Verdict {
    assert_eq!(f.len(), g.n(), "labeling length must equal vertex count");
    let mut violations = Vec::new();
    for u in g.vertices() {
        if labelsum(g, f, u) < 1 {
            violations.push(Violation {
                vertex: u,
                reason: ViolationReason::LabelsumBelowOne,
            });
        }
        if f.get(u) == Label::Minus && !g.neighbors(u).iter().any(|&v| f.get(v) == Label::Two) {
            violations.push(Violation {
                vertex: u,
                reason: ViolationReason::MinusWithoutTwoNeighbour,
            });
        }
    }
    Verdict {
        valid: violations.is_empty(),
        violations,
    }
}

/// `((−2Δ² + 2Δδ + Δ + 2δ + 3) / ((Δ+1)(2Δ+δ+3))) · n` as an exact rational.
///
/// Returns zero for the empty graph.
pub fn lower_bound_degree(g: &Graph) -> Ratio<i64> {
    if g.n() == 0 {
        return Ratio::from_integer(0);
    }
    let big = g.max_degree() as i64;
    let small = g.min_degree() as i64;
    let numer = -2 * big * big + 2 * big * small + big + 2 * small + 3;
    let denom = (big + 1) * (2 * big + small + 3);
    Ratio::new(numer, denom) * Ratio::from_integer(g.n() as i64)
}

/// Sum over connected components of `⌈lower_bound_degree(component)⌉`.
pub fn lower_bound_by_components(g: &Graph) -> i64 {
    g.components()
        .iter()
        .map(|comp| lower_bound_degree(&g.induced(comp)).ceil().to_integer())
        .sum()
}
