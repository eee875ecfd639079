//! Exact solvers: exhaustive enumeration and branch-and-bound.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::srdf::{is_valid_srdf, weight, Label, Labeling};

/// Largest vertex count the exhaustive solver accepts by default.
pub const DEFAULT_BRUTE_CAP: usize = 14;

/// Wall-clock budget used when none is given.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algo {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "bb")]
    Bb,
    #[serde(rename = "nd-ilp")]
    NdIlp,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Brute, Algo::Bb, Algo::NdIlp];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Brute => "brute",
            Algo::Bb => "bb",
            Algo::NdIlp => "nd-ilp",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| SolveError::UnknownAlgo(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{n} vertices exceeds the exhaustive-search cap of {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("supplied incumbent is not a valid labeling of the stated weight")]
    InvalidIncumbent,
    #[error("search exceeded its time budget without settling the question")]
    Timeout,
    #[error("unknown algorithm `{0}` (expected brute, bb or nd-ilp)")]
    UnknownAlgo(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Optimum with a witness labeling achieving it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub optimum: i64,
    pub witness: Labeling,
    /// Search nodes (or labelings, or guesses) examined.
    pub explored: u64,
    pub algo: Algo,
    /// False only when a time budget ran out; `optimum` is then an upper bound.
    pub certified: bool,
}

pub fn solve_brute(g: &Graph) -> Result<SolveResult, SolveError> {
    solve_brute_with_cap(g, DEFAULT_BRUTE_CAP)
}

/// Enumerates all `3^n` labelings in lexicographic order (vertex 0 most
/// significant, −1 < 1 < 2) and keeps the first one of minimum weight.
pub fn solve_brute_with_cap(g: &Graph, cap: usize) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > cap {
        return Err(SolveError::SizeCap { n, cap });
    }
    let mut digits = vec![0usize; n];
    let mut values = vec![-1i64; n];
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut explored = 0u64;
    loop {
        explored += 1;
        let w: i64 = values.iter().sum();
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) && satisfies(g, &values) {
            best = Some((w, values.clone()));
        }
        // Odometer increment from the least significant vertex.
        let mut pos = n;
        loop {
            if pos == 0 {
                let (optimum, vals) = best.expect("the all-1 labeling is always valid");
                let witness = Labeling::from_values(&vals).expect("labels drawn from the domain");
                return Ok(SolveResult {
                    optimum,
                    witness,
                    explored,
                    algo: Algo::Brute,
                    certified: true,
                });
            }
            pos -= 1;
            if digits[pos] < 2 {
                digits[pos] += 1;
                values[pos] = Label::ALL[digits[pos]].value();
                break;
            }
            digits[pos] = 0;
            values[pos] = -1;
        }
    }
}

fn satisfies(g: &Graph, values: &[i64]) -> bool {
    g.vertices().all(|u| {
        let nbrs = g.neighbors(u);
        values[u] + nbrs.iter().map(|&v| values[v]).sum::<i64>() >= 1
            && (values[u] != -1 || nbrs.iter().any(|&v| values[v] == 2))
    })
}

/// Options for [`solve_bb_with`] and [`decide_bb`].
#[derive(Debug, Clone, Default)]
pub struct BbOptions {
    /// Valid labeling and its weight; defaults to the all-1 labeling.
    pub incumbent: Option<(Labeling, i64)>,
    /// Wall-clock budget; `None` searches to completion.
    pub timeout: Option<Duration>,
}

pub fn solve_bb(g: &Graph, initial_incumbent: Option<(Labeling, i64)>) -> Result<SolveResult, SolveError> {
    solve_bb_with(
        g,
        &BbOptions {
            incumbent: initial_incumbent,
            timeout: None,
        },
    )
}

/// Branch-and-bound minimization.
///
/// Vertices are assigned in decreasing-degree order (ties by index), trying
/// labels 2, 1, −1. A branch is cut when
/// (a)/(b) some closed neighbourhood cannot reach a sum of 1 even with every
/// free vertex labelled 2,
/// (c) a −1 vertex has all neighbours assigned and none labelled 2,
/// (d) partial weight minus the number of free vertices already meets the incumbent,
/// (e) a closed-neighbourhood packing bound meets the incumbent.
///
/// On timeout the best labeling found so far is returned with `certified = false`.
pub fn solve_bb_with(g: &Graph, opts: &BbOptions) -> Result<SolveResult, SolveError> {
    let (incumbent, inc_weight) = checked_incumbent(g, opts.incumbent.as_ref())?;
    let mut search = Search::new(g, inc_weight, opts.timeout, false);
    search.run();
    let timed_out = search.timed_out;
    let explored = search.explored;
    let (optimum, witness) = match search.best {
        Some(vals) => (vals.iter().map(|&v| i64::from(v)).sum(), to_labeling(&vals)),
        None => (inc_weight, incumbent),
    };
    Ok(SolveResult {
        optimum,
        witness,
        explored,
        algo: Algo::Bb,
        certified: !timed_out,
    })
}

fn checked_incumbent(g: &Graph, given: Option<&(Labeling, i64)>) -> Result<(Labeling, i64), SolveError> {
    match given {
        Some((f, w)) => {
            if f.len() != g.n() || weight(f) != *w || !is_valid_srdf(g, f).valid {
                return Err(SolveError::InvalidIncumbent);
            }
            Ok((f.clone(), *w))
        }
        None => Ok((Labeling::uniform(g.n(), Label::One), g.n() as i64)),
    }
}

fn to_labeling(vals: &[i8]) -> Labeling {
    Labeling::from_values(&vals.iter().map(|&v| i64::from(v)).collect::<Vec<_>>())
        .expect("search only assigns domain labels")
}

/// Outcome of a decision query answered by branch-and-bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    /// `None` when the time budget ran out first.
    pub answer: Option<bool>,
    /// A labeling of weight at most `k` when the answer is yes.
    pub witness: Option<Labeling>,
    pub explored: u64,
}

/// Decides `γ_sR(g) ≤ k` by branch-and-bound, stopping at the first labeling
/// of weight at most `k` and pruning every branch whose bound exceeds `k`.
pub fn decide_bb(g: &Graph, k: i64, opts: &BbOptions) -> Result<Decision, SolveError> {
    let (incumbent, inc_weight) = checked_incumbent(g, opts.incumbent.as_ref())?;
    if inc_weight <= k {
        return Ok(Decision {
            answer: Some(true),
            witness: Some(incumbent),
            explored: 0,
        });
    }
    let mut search = Search::new(g, k.saturating_add(1), opts.timeout, true);
    search.run();
    let answer = match (&search.best, search.timed_out) {
        (Some(_), _) => Some(true),
        (None, false) => Some(false),
        (None, true) => None,
    };
    Ok(Decision {
        answer,
        witness: search.best.as_deref().map(to_labeling),
        explored: search.explored,
    })
}

/// Whether `γ_sR(g) ≤ k`, using the chosen solver.
///
/// The branch-and-bound route uses [`DEFAULT_TIMEOUT`] and reports
/// [`SolveError::Timeout`] if it cannot settle the question in time.
pub fn decide(g: &Graph, k: i64, algo: Algo) -> Result<bool, SolveError> {
    match algo {
        Algo::Brute => Ok(solve_brute(g)?.optimum <= k),
        Algo::NdIlp => Ok(crate::nd::solve_nd(g)?.optimum <= k),
        Algo::Bb => {
            let opts = BbOptions {
                incumbent: None,
                timeout: Some(DEFAULT_TIMEOUT),
            };
            decide_bb(g, k, &opts)?.answer.ok_or(SolveError::Timeout)
        }
    }
}

const FREE: i8 = 0;
const CLOCK_INTERVAL: u64 = 4096;

struct Search<'g> {
    g: &'g Graph,
    order: Vec<Vertex>,
    label: Vec<i8>,
    closed_sum: Vec<i64>,
    closed_free: Vec<i64>,
    open_twos: Vec<u32>,
    open_free: Vec<u32>,
    partial: i64,
    free: i64,
    /// Packing centre owning each vertex's closed neighbourhood slot, if any.
    pack_of: Vec<Option<usize>>,
    pack_centres: Vec<Vertex>,
    pack_value: Vec<i64>,
    pack_total: i64,
    /// Σ over vertices outside the packing of (label, or −1 when free).
    outside: i64,
    /// Exclusive upper bound: only labelings of weight below this are accepted.
    bound: i64,
    best: Option<Vec<i8>>,
    stop_at_first: bool,
    deadline: Option<Instant>,
    timed_out: bool,
    done: bool,
    explored: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, bound: i64, timeout: Option<Duration>, stop_at_first: bool) -> Self {
        let n = g.n();
        let mut order: Vec<Vertex> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

        // Greedy packing of pairwise disjoint closed neighbourhoods, smallest first.
        let mut by_size: Vec<Vertex> = g.vertices().collect();
        by_size.sort_by_key(|&v| (g.degree(v), v));
        let mut pack_of = vec![None; n];
        let mut pack_centres = Vec::new();
        for c in by_size {
            let closed = std::iter::once(c).chain(g.neighbors(c).iter().copied());
            if closed.clone().all(|v| pack_of[v].is_none()) {
                let idx = pack_centres.len();
                for v in closed {
                    pack_of[v] = Some(idx);
                }
                pack_centres.push(c);
            }
        }

        let closed_free: Vec<i64> = g.vertices().map(|v| g.degree(v) as i64 + 1).collect();
        let open_free: Vec<u32> = g.vertices().map(|v| g.degree(v) as u32).collect();
        let outside = -(pack_of.iter().filter(|p| p.is_none()).count() as i64);
        let mut s = Self {
            g,
            order,
            label: vec![FREE; n],
            closed_sum: vec![0; n],
            closed_free,
            open_twos: vec![0; n],
            open_free,
            partial: 0,
            free: n as i64,
            pack_value: vec![0; pack_centres.len()],
            pack_of,
            pack_centres,
            pack_total: 0,
            outside,
            bound,
            best: None,
            stop_at_first,
            deadline: timeout.map(|t| Instant::now() + t),
            timed_out: false,
            done: false,
            explored: 0,
        };
        for idx in 0..s.pack_centres.len() {
            let val = s.pack_min(s.pack_centres[idx]);
            s.pack_value[idx] = val;
            s.pack_total += val;
        }
        s
    }

    /// Lower bound on the label sum of `N[c]` given the current partial assignment.
    fn pack_min(&self, c: Vertex) -> i64 {
        let a = self.closed_sum[c];
        let u = self.closed_free[c];
        let has_two = self.open_twos[c] > 0;
        let open_free = self.open_free[c];
        let unconstrained = match self.label[c] {
            FREE => {
                if has_two {
                    a - u
                } else if open_free >= 1 {
                    // c = −1 with one free neighbour raised to 2, or c = 1.
                    (a - u + 3).min(a - u + 2)
                } else {
                    a - u + 2
                }
            }
            -1 if !has_two && open_free >= 1 => a - u + 3,
            _ => a - u,
        };
        unconstrained.max(1)
    }

    fn lower_bound(&self) -> i64 {
        self.pack_total + self.outside
    }

    fn run(&mut self) {
        if self.lower_bound() < self.bound {
            self.branch(0);
        }
    }

    fn branch(&mut self, depth: usize) {
        self.explored += 1;
        if let Some(deadline) = self.deadline {
            if self.explored.is_multiple_of(CLOCK_INTERVAL) && Instant::now() >= deadline {
                self.timed_out = true;
                self.done = true;
            }
        }
        if self.done {
            return;
        }
        if depth == self.order.len() {
            if self.partial < self.bound {
                self.bound = self.partial;
                self.best = Some(self.label.clone());
                if self.stop_at_first {
                    self.done = true;
                }
            }
            return;
        }
        let v = self.order[depth];
        for l in [2i8, 1, -1] {
            let feasible = self.assign(v, l);
            if feasible
                && self.partial - self.free < self.bound
                && self.lower_bound() < self.bound
            {
                self.branch(depth + 1);
            }
            self.unassign(v, l);
            if self.done {
                return;
            }
        }
    }

    /// Assigns `l` to `v`, updating counters; returns false if a pruning rule fires.
    fn assign(&mut self, v: Vertex, l: i8) -> bool {
        let g = self.g;
        let val = i64::from(l);
        self.label[v] = l;
        self.partial += val;
        self.free -= 1;
        self.closed_sum[v] += val;
        self.closed_free[v] -= 1;
        for &w in g.neighbors(v) {
            self.closed_sum[w] += val;
            self.closed_free[w] -= 1;
            self.open_free[w] -= 1;
            if l == 2 {
                self.open_twos[w] += 1;
            }
        }
        self.refresh_bound_for(v, val + 1);

        let reachable = |s: &Self, w: Vertex| s.closed_sum[w] + 2 * s.closed_free[w] >= 1;
        let dominated_minus =
            |s: &Self, w: Vertex| s.label[w] != -1 || s.open_twos[w] > 0 || s.open_free[w] > 0;
        if !reachable(self, v) || !dominated_minus(self, v) {
            return false;
        }
        g.neighbors(v)
            .iter()
            .all(|&w| reachable(self, w) && dominated_minus(self, w))
    }

    fn unassign(&mut self, v: Vertex, l: i8) {
        let g = self.g;
        let val = i64::from(l);
        self.label[v] = FREE;
        self.partial -= val;
        self.free += 1;
        self.closed_sum[v] -= val;
        self.closed_free[v] += 1;
        for &w in g.neighbors(v) {
            self.closed_sum[w] -= val;
            self.closed_free[w] += 1;
            self.open_free[w] += 1;
            if l == 2 {
                self.open_twos[w] -= 1;
            }
        }
        self.refresh_bound_for(v, -(val + 1));
    }

    /// Recomputes the packing term touched by a change at `v`. Packed closed
    /// neighbourhoods are disjoint, so at most one centre sees `v`.
    fn refresh_bound_for(&mut self, v: Vertex, delta_outside: i64) {
        match self.pack_of[v] {
            Some(idx) => {
                let val = self.pack_min(self.pack_centres[idx]);
                self.pack_total += val - self.pack_value[idx];
                self.pack_value[idx] = val;
            }
            None => self.outside += delta_outside,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};
    use crate::srdf::is_valid_srdf;

    fn g(kind: GraphKind, params: &[usize]) -> Graph {
        generate(kind, params, Some(1)).unwrap()
    }

    #[test]
    fn brute_examples() {
        let k1 = solve_brute(&Graph::empty(1)).unwrap();
        assert_eq!(k1.optimum, 1);
        assert_eq!(k1.witness.values(), vec![1]);

        let k2 = solve_brute(&g(GraphKind::Path, &[2])).unwrap();
        assert_eq!(k2.optimum, 1);
        assert_eq!(k2.witness.values(), vec![-1, 2]);

        let p3 = solve_brute(&g(GraphKind::Path, &[3])).unwrap();
        assert_eq!(p3.optimum, 2);
        assert!(is_valid_srdf(&g(GraphKind::Path, &[3]), &p3.witness).valid);
    }

    #[test]
    fn brute_respects_cap() {
        let big = Graph::empty(15);
        assert_eq!(
            solve_brute(&big),
            Err(SolveError::SizeCap { n: 15, cap: 14 })
        );
        assert!(solve_brute_with_cap(&Graph::empty(3), 2).is_err());
    }

    #[test]
    fn bb_matches_brute_on_named_graphs() {
        for graph in [
            g(GraphKind::Cycle, &[4]),
            g(GraphKind::Complete, &[4]),
            g(GraphKind::Wheel, &[5]),
            g(GraphKind::Star, &[4]),
            Graph::empty(3),
            Graph::empty(0),
        ] {
            let brute = solve_brute(&graph).unwrap();
            let bb = solve_bb(&graph, None).unwrap();
            assert_eq!(bb.optimum, brute.optimum, "{graph:?}");
            assert!(bb.certified);
            assert!(is_valid_srdf(&graph, &bb.witness).valid);
            assert_eq!(weight(&bb.witness), bb.optimum);
        }
    }

    #[test]
    fn bb_never_worse_than_incumbent() {
        let graph = g(GraphKind::Cycle, &[5]);
        let inc = Labeling::uniform(5, Label::One);
        let r = solve_bb(&graph, Some((inc, 5))).unwrap();
        assert!(r.optimum <= 5);
    }

    #[test]
    fn bb_rejects_bad_incumbent() {
        let graph = g(GraphKind::Path, &[2]);
        let bad = Labeling::from_values(&[-1, -1]).unwrap();
        assert_eq!(solve_bb(&graph, Some((bad, -2))), Err(SolveError::InvalidIncumbent));
        let wrong_weight = Labeling::uniform(2, Label::One);
        assert_eq!(
            solve_bb(&graph, Some((wrong_weight, 1))),
            Err(SolveError::InvalidIncumbent)
        );
    }

    #[test]
    fn bb_timeout_is_uncertified() {
        let graph = g(GraphKind::RandomGnp, &[60, 10]);
        let r = solve_bb_with(
            &graph,
            &BbOptions {
                incumbent: None,
                timeout: Some(Duration::from_millis(1)),
            },
        )
        .unwrap();
        if !r.certified {
            assert!(r.optimum <= 60);
        }
        assert!(is_valid_srdf(&graph, &r.witness).valid);
    }

    #[test]
    fn decide_examples() {
        let k2 = g(GraphKind::Path, &[2]);
        for algo in Algo::ALL {
            assert!(decide(&k2, 1, algo).unwrap());
            assert!(!decide(&k2, 0, algo).unwrap());
        }
        let c6 = g(GraphKind::Cycle, &[6]);
        assert!(decide(&c6, 6, Algo::Bb).unwrap());
    }

    #[test]
    fn algo_names() {
        for a in Algo::ALL {
            assert_eq!(a.name().parse::<Algo>().unwrap(), a);
        }
        assert!("lp".parse::<Algo>().is_err());
    }
}
