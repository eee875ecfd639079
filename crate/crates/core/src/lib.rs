//! Exact solving and hardness-reduction toolkit for signed Roman domination.
//!
//! A signed Roman dominating function labels every vertex with −1, 1 or 2 so
//! that each closed neighbourhood sums to at least 1 and every −1 vertex has a
//! neighbour labelled 2. This crate provides
//!
//! * graph plumbing: [`graph`], [`format`], [`generate`], [`classes`];
//! * labeling semantics and the degree lower bound: [`srdf`];
//! * exact solvers: exhaustive search and branch-and-bound in [`exact`], and
//!   the neighbourhood-diversity algorithm in [`nd`];
//! * the four hardness constructions with their forward labelings and
//!   brute-force source oracles: [`reductions`].

pub mod classes;
pub mod exact;
pub mod format;
pub mod generate;
pub mod graph;
pub mod nd;
pub mod reductions;
pub mod srdf;

pub use exact::{decide, solve_bb, solve_brute, Algo, SolveError, SolveResult};
pub use graph::{Graph, GraphError, Vertex};
pub use nd::solve_nd;
pub use srdf::{is_valid_srdf, labelsum, lower_bound_degree, weight, Label, Labeling, Verdict};
