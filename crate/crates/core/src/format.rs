//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! p <n> <m>
//! e <u> <v>     (m lines, endpoints 1-indexed)
//! ```
//!
//! The writer is canonical: edges are emitted in ascending `(min, max)` order,
//! so `write_graph(parse_graph(s))` normalizes any valid input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `p <n> <m>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: malformed edge line, expected `e <u> <v>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: unrecognized line")]
    UnknownLine { line: usize },
    #[error("line {line}: endpoint {vertex} out of range 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announced {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

fn parse_numbers<const N: usize>(rest: std::str::SplitWhitespace<'_>) -> Option<[usize; N]> {
    let mut out = [0usize; N];
    let mut rest = rest;
    for slot in &mut out {
        *slot = rest.next()?.parse().ok()?;
    }
    rest.next().is_none().then_some(out)
}

/// Parses the edge-list format into a [`Graph`].
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let [n, m] =
                    parse_numbers::<2>(tokens).ok_or(ParseError::MalformedHeader { line })?;
                header = Some((n, m));
            }
            Some("e") => {
                let [u, v] =
                    parse_numbers::<2>(tokens).ok_or(ParseError::MalformedEdge { line })?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(ParseError::OutOfRange { line, vertex, n });
                    }
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: key.0,
                        v: key.1,
                    });
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(ParseError::UnknownLine { line }),
        }
    }

    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges).expect("edge list validated while parsing"))
}

/// Canonical serialization of a graph.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
