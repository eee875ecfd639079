//! Neighbourhood-diversity algorithm.
//!
//! Vertices `u`, `v` share a type when `N(u) \ {v} = N(v) \ {u}`. Each type
//! class is a clique or an independent set, and any two classes are either
//! completely joined or completely non-adjacent. Within a class, only the
//! multiset of labels matters, so a labeling is described by
//!
//! 1. a guess of which labels occur in each class (three presence flags), and
//! 2. the weight of each class, drawn from the exact set of weights the
//!    guessed label mix can realize.
//!
//! For a fixed guess, every domination constraint becomes a linear inequality
//! over class weights. [`solve_nd`] minimizes over all guesses.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Algo, SolveError, SolveResult};
use crate::graph::{Graph, Vertex};
use crate::srdf::{is_valid_srdf, weight, Label, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Clique,
    Independent,
}

/// Coarsest partition of the vertex set into type classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdPartition {
    classes: Vec<Vec<Vertex>>,
    kinds: Vec<ClassKind>,
    adjacency: Vec<Vec<bool>>,
    neighbours: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl NdPartition {
    /// Neighbourhood diversity `t`.
    pub fn t(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[Vertex] {
        &self.classes[i]
    }

    pub fn kind(&self, i: usize) -> ClassKind {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[ClassKind] {
        &self.kinds
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    /// Classes completely joined to class `i`, ascending.
    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.neighbours[i]
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }
}

/// Whether `u` and `v` have the same type.
pub fn same_type(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let a = g.neighbors(u).iter().filter(|&&w| w != v);
    let b = g.neighbors(v).iter().filter(|&&w| w != u);
    a.eq(b)
}

/// Computes the type partition. Classes are ordered by smallest member;
/// singleton classes are reported as independent.
pub fn nd_partition(g: &Graph) -> NdPartition {
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in g.vertices() {
        match classes.iter().position(|c| same_type(g, c[0], v)) {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    let kinds = classes
        .iter()
        .map(|c| {
            if c.len() >= 2 && g.has_edge(c[0], c[1]) {
                ClassKind::Clique
            } else {
                ClassKind::Independent
            }
        })
        .collect();
    let t = classes.len();
    let mut adjacency = vec![vec![false; t]; t];
    for i in 0..t {
        for j in (i + 1)..t {
            let joined = g.has_edge(classes[i][0], classes[j][0]);
            adjacency[i][j] = joined;
            adjacency[j][i] = joined;
        }
    }
    let neighbours = adjacency
        .iter()
        .map(|row| (0..t).filter(|&j| row[j]).collect())
        .collect();
    NdPartition {
        classes,
        kinds,
        adjacency,
        neighbours,
        class_of,
    }
}

/// Which labels occur in a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flags {
    pub minus: bool,
    pub one: bool,
    pub two: bool,
}

impl Flags {
    /// Bit 2 = −1 present, bit 1 = 1 present, bit 0 = 2 present.
    pub const fn from_mask(mask: u8) -> Self {
        Self {
            minus: mask & 4 != 0,
            one: mask & 2 != 0,
            two: mask & 1 != 0,
        }
    }

    pub const fn mask(self) -> u8 {
        (self.minus as u8) << 2 | (self.one as u8) << 1 | self.two as u8
    }

    pub const fn count(self) -> usize {
        self.minus as usize + self.one as usize + self.two as usize
    }

    pub const fn is_empty(self) -> bool {
        self.count() == 0
    }

    /// Smallest label present; what an independent-class vertex contributes
    /// to its own closed neighbourhood in the worst case.
    pub fn smallest_label(self) -> Option<i64> {
        if self.minus {
            Some(-1)
        } else if self.one {
            Some(1)
        } else if self.two {
            Some(2)
        } else {
            None
        }
    }

    /// Non-empty flag triples that fit in a class of `size` vertices, by mask.
    pub fn allowed(size: usize) -> impl Iterator<Item = Flags> {
        (1u8..8).map(Flags::from_mask).filter(move |f| f.count() <= size)
    }
}

/// One presence-flag triple per class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GuessVector(pub Vec<Flags>);

impl GuessVector {
    pub fn flags(&self) -> &[Flags] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NdError {
    #[error("flag triple (0,0,0) describes no labels")]
    EmptyFlags,
    #[error("{count} flags set for a class of {size} vertices")]
    TooManyFlags { count: usize, size: usize },
    #[error("weight {weight} is not achievable for a class of {size} vertices under flags {flags:?}")]
    Unachievable { weight: i64, size: usize, flags: Flags },
    #[error("guess has {got} classes, partition has {expected}")]
    ShapeMismatch { expected: usize, got: usize },
}

fn check_flags(size: usize, flags: Flags) -> Result<(), NdError> {
    if flags.is_empty() {
        return Err(NdError::EmptyFlags);
    }
    if flags.count() > size {
        return Err(NdError::TooManyFlags {
            count: flags.count(),
            size,
        });
    }
    Ok(())
}

/// Label counts `(p, q, r)` of (−1, 1, 2) meeting the flags, in order of
/// increasing `p` then increasing `r`.
fn label_counts(size: usize, flags: Flags) -> impl Iterator<Item = (usize, usize, usize)> {
    let range = move |present: bool| if present { 1..=size } else { 0..=0 };
    range(flags.minus).flat_map(move |p| {
        range(flags.two).filter_map(move |r| {
            let q = size.checked_sub(p + r)?;
            ((q > 0) == flags.one).then_some((p, q, r))
        })
    })
}

fn counts_weight((p, q, r): (usize, usize, usize)) -> i64 {
    -(p as i64) + q as i64 + 2 * r as i64
}

/// Exact set of class weights `−p + q + 2r` realizable by a class of `size`
/// vertices whose label presence matches `flags`, ascending.
pub fn achievable_weights(size: usize, flags: Flags) -> Result<Vec<i64>, NdError> {
    check_flags(size, flags)?;
    let mut out: Vec<i64> = label_counts(size, flags).map(counts_weight).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Iterator over every guess vector in mixed-radix order (last class fastest).
#[derive(Debug, Clone)]
pub struct Guesses {
    choices: Vec<Vec<Flags>>,
    cursor: Option<Vec<usize>>,
}

impl Iterator for Guesses {
    type Item = GuessVector;

    fn next(&mut self) -> Option<GuessVector> {
        let cursor = self.cursor.as_mut()?;
        let item = GuessVector(
            cursor
                .iter()
                .zip(&self.choices)
                .map(|(&i, opts)| opts[i])
                .collect(),
        );
        let mut pos = cursor.len();
        loop {
            if pos == 0 {
                self.cursor = None;
                break;
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < self.choices[pos].len() {
                break;
            }
            cursor[pos] = 0;
        }
        Some(item)
    }
}

/// All guesses with no empty class and at most `|V_i|` flags in class `i`.
pub fn enumerate_guesses(p: &NdPartition) -> Guesses {
    let choices: Vec<Vec<Flags>> = p
        .classes
        .iter()
        .map(|c| Flags::allowed(c.len()).collect())
        .collect();
    let cursor = choices.iter().all(|c| !c.is_empty()).then(|| vec![0; choices.len()]);
    Guesses { choices, cursor }
}

/// Whether every class guessed to contain a −1 can see a 2: through an
/// adjacent class with a 2, or, for a clique class, through its own 2.
pub fn check_guess_feasible(p: &NdPartition, gv: &GuessVector) -> bool {
    let flags = gv.flags();
    (0..p.t()).all(|i| {
        !flags[i].minus
            || (p.kinds[i] == ClassKind::Clique && flags[i].two)
            || p.neighbours[i].iter().any(|&j| flags[j].two)
    })
}

/// Decision variable for one class weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassWeightVar {
    pub domain: Vec<i64>,
    pub chosen: Option<i64>,
}

/// Optimal per-class weights for one guess.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessSolution {
    pub weights: Vec<i64>,
    pub total: i64,
}

/// `constant + Σ_{j ∈ terms} w_j ≥ 1`.
#[derive(Debug, Clone)]
struct Constraint {
    constant: i64,
    terms: Vec<usize>,
}

fn class_constraints(p: &NdPartition, flags: &[Flags]) -> Vec<Constraint> {
    (0..p.t())
        .map(|i| match p.kinds[i] {
            ClassKind::Clique => Constraint {
                constant: 0,
                terms: std::iter::once(i).chain(p.neighbours[i].iter().copied()).collect(),
            },
            ClassKind::Independent => Constraint {
                constant: flags[i].smallest_label().expect("non-empty flags"),
                terms: p.neighbours[i].clone(),
            },
        })
        .collect()
}

/// Minimizes the total class weight for a fixed guess; `None` if infeasible.
pub fn solve_guess_ilp(p: &NdPartition, gv: &GuessVector) -> Option<GuessSolution> {
    solve_guess_ilp_below(p, gv, i64::MAX).map(|(s, _)| s)
}

/// Like [`solve_guess_ilp`], but only reports solutions with total below `cutoff`.
/// Also returns the number of search nodes.
fn solve_guess_ilp_below(p: &NdPartition, gv: &GuessVector, cutoff: i64) -> Option<(GuessSolution, u64)> {
    let flags = gv.flags();
    let mut vars: Vec<ClassWeightVar> = Vec::with_capacity(p.t());
    for (class, &f) in p.classes.iter().zip(flags) {
        vars.push(ClassWeightVar {
            domain: achievable_weights(class.len(), f).ok()?,
            chosen: None,
        });
    }
    let constraints = class_constraints(p, flags);
    let mut touching = vec![Vec::new(); p.t()];
    for (ci, c) in constraints.iter().enumerate() {
        for &j in &c.terms {
            touching[j].push(ci);
        }
    }
    let mut order: Vec<usize> = (0..p.t()).collect();
    order.sort_by_key(|&i| (vars[i].domain.len(), i));
    let mut suffix_min = vec![0i64; order.len() + 1];
    for d in (0..order.len()).rev() {
        suffix_min[d] = suffix_min[d + 1] + vars[order[d]].domain[0];
    }

    // Constraints with no variables are decided up front.
    if constraints.iter().any(|c| c.terms.is_empty() && c.constant < 1) {
        return None;
    }

    let mut ilp = IlpSearch {
        vars,
        constraints,
        touching,
        order,
        suffix_min,
        cutoff,
        best: None,
        nodes: 0,
    };
    ilp.dfs(0, 0);
    let nodes = ilp.nodes;
    ilp.best.map(|weights| {
        let total = weights.iter().sum();
        (GuessSolution { weights, total }, nodes)
    })
}

struct IlpSearch {
    vars: Vec<ClassWeightVar>,
    constraints: Vec<Constraint>,
    touching: Vec<Vec<usize>>,
    order: Vec<usize>,
    suffix_min: Vec<i64>,
    cutoff: i64,
    best: Option<Vec<i64>>,
    nodes: u64,
}

impl IlpSearch {
    fn optimistic(&self, c: &Constraint) -> i64 {
        c.constant
            + c.terms
                .iter()
                .map(|&j| {
                    let v = &self.vars[j];
                    v.chosen.unwrap_or(*v.domain.last().expect("non-empty domain"))
                })
                .sum::<i64>()
    }

    fn dfs(&mut self, depth: usize, decided: i64) {
        self.nodes += 1;
        if depth == self.order.len() {
            if decided < self.cutoff {
                self.cutoff = decided;
                self.best = Some(
                    self.vars
                        .iter()
                        .map(|v| v.chosen.expect("all variables decided"))
                        .collect(),
                );
            }
            return;
        }
        let x = self.order[depth];
        for k in 0..self.vars[x].domain.len() {
            let val = self.vars[x].domain[k];
            // Domains are ascending, so once the objective bound fails it fails for the rest.
            if decided + val + self.suffix_min[depth + 1] >= self.cutoff {
                break;
            }
            self.vars[x].chosen = Some(val);
            let ok = self.touching[x]
                .iter()
                .all(|&ci| self.optimistic(&self.constraints[ci]) >= 1);
            if ok {
                self.dfs(depth + 1, decided + val);
            }
        }
        self.vars[x].chosen = None;
    }
}

/// Labels each class with the given weight: picks counts `(p, q, r)` with the
/// smallest `p`, then the smallest `r`, and assigns −1, then 1, then 2 to the
/// class members in increasing vertex order.
pub fn realize_labeling(p: &NdPartition, gv: &GuessVector, weights: &[i64]) -> Result<Labeling, NdError> {
    let flags = gv.flags();
    if flags.len() != p.t() || weights.len() != p.t() {
        return Err(NdError::ShapeMismatch {
            expected: p.t(),
            got: flags.len().min(weights.len()),
        });
    }
    let mut f = Labeling::uniform(p.vertex_count(), Label::One);
    for ((class, &fl), &w) in p.classes.iter().zip(flags).zip(weights) {
        check_flags(class.len(), fl)?;
        let (minus, one, _) = label_counts(class.len(), fl)
            .find(|&c| counts_weight(c) == w)
            .ok_or(NdError::Unachievable {
                weight: w,
                size: class.len(),
                flags: fl,
            })?;
        for (pos, &v) in class.iter().enumerate() {
            let label = if pos < minus {
                Label::Minus
            } else if pos < minus + one {
                Label::One
            } else {
                Label::Two
            };
            f.set(v, label);
        }
    }
    Ok(f)
}

/// Minimum-weight signed Roman dominating function via the type partition.
///
/// Guesses are explored as a search tree over classes so that whole families
/// of guesses can be discarded at once: a prefix is cut when some class's
/// −1 vertices can no longer see a 2, when some domination inequality cannot
/// be met even with every undecided class at its largest weight, or when the
/// smallest possible total cannot beat the best found. Each complete guess is
/// then solved exactly by [`solve_guess_ilp`]'s search. The optimum is the
/// minimum over all feasible guesses.
pub fn solve_nd(g: &Graph) -> Result<SolveResult, SolveError> {
    let p = nd_partition(g);
    let mut search = GuessSearch::new(&p, g.n() as i64 + 1);
    search.dfs(0);
    let (gv, sol) = search
        .best
        .ok_or_else(|| SolveError::Internal("no feasible guess (the all-1 guess always is)".into()))?;
    let witness = realize_labeling(&p, &gv, &sol.weights).map_err(|e| SolveError::Internal(e.to_string()))?;
    if !is_valid_srdf(g, &witness).valid || weight(&witness) != sol.total {
        return Err(SolveError::Internal(
            "realized labeling failed re-validation".into(),
        ));
    }
    Ok(SolveResult {
        optimum: sol.total,
        witness,
        explored: search.nodes,
        algo: Algo::NdIlp,
        certified: true,
    })
}

struct GuessSearch<'p> {
    p: &'p NdPartition,
    order: Vec<usize>,
    /// Position of each class in `order`.
    rank: Vec<usize>,
    choices: Vec<Vec<(Flags, i64, i64)>>,
    flags: Vec<Option<Flags>>,
    /// Smallest / largest achievable weight per class under the current flags,
    /// or over all flags while undecided.
    low: Vec<i64>,
    high: Vec<i64>,
    cutoff: i64,
    best: Option<(GuessVector, GuessSolution)>,
    nodes: u64,
}

impl<'p> GuessSearch<'p> {
    fn new(p: &'p NdPartition, cutoff: i64) -> Self {
        let t = p.t();
        let mut order: Vec<usize> = (0..t).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(p.neighbours[i].len()), i));
        let mut rank = vec![0; t];
        for (pos, &i) in order.iter().enumerate() {
            rank[i] = pos;
        }
        let choices: Vec<Vec<(Flags, i64, i64)>> = p
            .classes
            .iter()
            .map(|c| {
                Flags::allowed(c.len())
                    .map(|f| {
                        let w = achievable_weights(c.len(), f).expect("allowed flags fit");
                        (f, w[0], *w.last().expect("non-empty"))
                    })
                    .collect()
            })
            .collect();
        let low = p.classes.iter().map(|c| -(c.len() as i64)).collect();
        let high = p.classes.iter().map(|c| 2 * c.len() as i64).collect();
        Self {
            p,
            order,
            rank,
            choices,
            flags: vec![None; t],
            low,
            high,
            cutoff,
            best: None,
            nodes: 0,
        }
    }

    fn decided(&self, i: usize, depth: usize) -> bool {
        self.rank[i] < depth
    }

    /// Checks the constraints of class `i` against the current prefix.
    fn class_ok(&self, i: usize, depth: usize) -> bool {
        let p = self.p;
        let nbrs = &p.neighbours[i];
        if let Some(f) = self.flags[i] {
            let sees_two = (p.kinds[i] == ClassKind::Clique && f.two)
                || nbrs
                    .iter()
                    .any(|&j| !self.decided(j, depth) || self.flags[j].is_some_and(|fj| fj.two));
            if f.minus && !sees_two {
                return false;
            }
        }
        let around: i64 = nbrs.iter().map(|&j| self.high[j]).sum();
        let own = match p.kinds[i] {
            ClassKind::Clique => self.high[i],
            ClassKind::Independent => self.flags[i].and_then(Flags::smallest_label).unwrap_or(2),
        };
        own + around >= 1
    }

    fn dfs(&mut self, depth: usize) {
        self.nodes += 1;
        if depth == self.order.len() {
            let gv = GuessVector(self.flags.iter().map(|f| f.expect("decided")).collect());
            debug_assert!(check_guess_feasible(self.p, &gv));
            if let Some((sol, nodes)) = solve_guess_ilp_below(self.p, &gv, self.cutoff) {
                self.nodes += nodes;
                self.cutoff = sol.total;
                self.best = Some((gv, sol));
            }
            return;
        }
        let x = self.order[depth];
        let (saved_low, saved_high) = (self.low[x], self.high[x]);
        let lower_rest: i64 = self.low.iter().sum::<i64>() - saved_low;
        for k in 0..self.choices[x].len() {
            let (f, lo, hi) = self.choices[x][k];
            if lower_rest + lo >= self.cutoff {
                continue;
            }
            self.flags[x] = Some(f);
            self.low[x] = lo;
            self.high[x] = hi;
            let ok = self.class_ok(x, depth + 1)
                && self.p.neighbours[x].iter().all(|&j| self.class_ok(j, depth + 1));
            if ok {
                self.dfs(depth + 1);
            }
        }
        self.flags[x] = None;
        self.low[x] = saved_low;
        self.high[x] = saved_high;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::solve_brute;
    use crate::generate::{complete_multipartite, generate, GraphKind};

    fn flags(a: u8, b: u8, c: u8) -> Flags {
        Flags::from_mask(a << 2 | b << 1 | c)
    }

    #[test]
    fn partition_examples() {
        let k5 = generate(GraphKind::Complete, &[5], None).unwrap();
        let p = nd_partition(&k5);
        assert_eq!(p.t(), 1);
        assert_eq!(p.kind(0), ClassKind::Clique);

        let c4 = generate(GraphKind::Cycle, &[4], None).unwrap();
        let p = nd_partition(&c4);
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p.kinds(), &[ClassKind::Independent, ClassKind::Independent]);
        assert!(p.adjacent(0, 1));

        let p4 = generate(GraphKind::Path, &[4], None).unwrap();
        assert_eq!(nd_partition(&p4).t(), 4);
    }

    #[test]
    fn achievable_weight_examples() {
        assert_eq!(achievable_weights(4, flags(1, 1, 1)).unwrap(), vec![1, 3, 4]);
        assert_eq!(achievable_weights(2, flags(1, 0, 1)).unwrap(), vec![1]);
        assert_eq!(achievable_weights(3, flags(0, 1, 0)).unwrap(), vec![3]);
        assert_eq!(achievable_weights(3, flags(0, 0, 0)), Err(NdError::EmptyFlags));
        assert_eq!(
            achievable_weights(1, flags(1, 1, 0)),
            Err(NdError::TooManyFlags { count: 2, size: 1 })
        );
    }

    #[test]
    fn guess_counts() {
        let single = |n: usize| nd_partition(&Graph::empty(n));
        assert_eq!(enumerate_guesses(&single(3)).count(), 7);
        assert_eq!(enumerate_guesses(&single(1)).count(), 3);
        // K_1 joined to an independent pair: classes of sizes 1 and 2.
        let star = generate(GraphKind::Star, &[2], None).unwrap();
        let p = nd_partition(&star);
        assert_eq!(p.classes(), &[vec![0], vec![1, 2]]);
        assert_eq!(enumerate_guesses(&p).count(), 18);
        assert_eq!(enumerate_guesses(&nd_partition(&Graph::empty(0))).count(), 1);
    }

    #[test]
    fn feasibility_examples() {
        let k3 = generate(GraphKind::Complete, &[3], None).unwrap();
        let p = nd_partition(&k3);
        assert!(check_guess_feasible(&p, &GuessVector(vec![flags(1, 0, 1)])));

        let e2 = nd_partition(&Graph::empty(2));
        assert!(!check_guess_feasible(&e2, &GuessVector(vec![flags(1, 0, 1)])));

        let k2 = nd_partition(&complete_multipartite(&[1, 1]));
        // K_2 is one clique class; use K_{2,2} for two adjacent independent classes.
        assert_eq!(k2.t(), 1);
        let c4 = nd_partition(&complete_multipartite(&[2, 2]));
        assert!(check_guess_feasible(
            &c4,
            &GuessVector(vec![flags(1, 0, 0), flags(0, 0, 1)])
        ));
    }

    #[test]
    fn guess_ilp_examples() {
        let k2 = nd_partition(&complete_multipartite(&[1, 1]));
        let sol = solve_guess_ilp(&k2, &GuessVector(vec![flags(1, 0, 1)])).unwrap();
        assert_eq!(sol, GuessSolution { weights: vec![1], total: 1 });

        let e1 = nd_partition(&Graph::empty(1));
        let sol = solve_guess_ilp(&e1, &GuessVector(vec![flags(0, 1, 0)])).unwrap();
        assert_eq!(sol.total, 1);

        // Two adjacent singleton classes: a path on two vertices seen as two
        // independent classes is impossible (they share a type), so build the
        // partition of P_3's end-and-middle instead: classes {0,2} and {1}.
        let p3 = nd_partition(&generate(GraphKind::Path, &[3], None).unwrap());
        assert_eq!(p3.classes(), &[vec![0, 2], vec![1]]);
        let sol = solve_guess_ilp(&p3, &GuessVector(vec![flags(1, 0, 0), flags(0, 0, 1)]));
        // Ends at −1 each give the middle 2 − 2 = 0 < 1.
        assert_eq!(sol, None);
        let sol = solve_guess_ilp(&p3, &GuessVector(vec![flags(1, 1, 0), flags(0, 0, 1)])).unwrap();
        assert_eq!(sol.weights, vec![0, 2]);
    }

    #[test]
    fn guess_ilp_two_singleton_classes() {
        // Two adjacent independent singleton classes, flags ((1,0,0),(0,0,1)).
        let p = NdPartition {
            classes: vec![vec![0], vec![1]],
            kinds: vec![ClassKind::Independent; 2],
            adjacency: vec![vec![false, true], vec![true, false]],
            neighbours: vec![vec![1], vec![0]],
            class_of: vec![0, 1],
        };
        let gv = GuessVector(vec![flags(1, 0, 0), flags(0, 0, 1)]);
        assert!(check_guess_feasible(&p, &gv));
        let sol = solve_guess_ilp(&p, &gv).unwrap();
        assert_eq!(sol, GuessSolution { weights: vec![-1, 2], total: 1 });
    }

    #[test]
    fn realize_examples() {
        let single = |n: usize| nd_partition(&Graph::empty(n));
        let f = realize_labeling(&single(2), &GuessVector(vec![flags(1, 0, 1)]), &[1]).unwrap();
        assert_eq!(f.values(), vec![-1, 2]);
        let f = realize_labeling(&single(3), &GuessVector(vec![flags(0, 1, 0)]), &[3]).unwrap();
        assert_eq!(f.values(), vec![1, 1, 1]);
        let f = realize_labeling(&single(4), &GuessVector(vec![flags(1, 1, 1)]), &[3]).unwrap();
        assert_eq!(f.values(), vec![-1, 1, 1, 2]);
        assert!(matches!(
            realize_labeling(&single(4), &GuessVector(vec![flags(1, 1, 1)]), &[2]),
            Err(NdError::Unachievable { .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let k2 = complete_multipartite(&[1, 1]);
        assert_eq!(solve_nd(&k2).unwrap().optimum, 1);
        let e3 = Graph::empty(3);
        assert_eq!(solve_nd(&e3).unwrap().optimum, 3);
        assert_eq!(solve_nd(&Graph::empty(0)).unwrap().optimum, 0);
        let k222 = complete_multipartite(&[2, 2, 2]);
        assert_eq!(
            solve_nd(&k222).unwrap().optimum,
            solve_brute(&k222).unwrap().optimum
        );
    }
}
