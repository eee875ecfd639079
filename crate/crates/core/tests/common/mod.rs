//! Seeded graph corpora shared by the integration tests.

#![allow(dead_code)]

use srd_core::generate::{complete_multipartite, generate, random_split, GraphKind};
use srd_core::Graph;

pub struct Case {
    pub name: String,
    pub graph: Graph,
}

fn case(name: impl Into<String>, graph: Graph) -> Case {
    Case {
        name: name.into(),
        graph,
    }
}

fn named(kind: GraphKind, params: &[usize], seed: Option<u64>) -> Case {
    let name = match seed {
        Some(s) => format!("{kind}{params:?}#{s}"),
        None => format!("{kind}{params:?}"),
    };
    case(name, generate(kind, params, seed).expect("valid generator parameters"))
}

/// More than 200 graphs on at most 10 vertices: structured families plus
/// random graphs of mixed density, trees, split and cubic graphs.
pub fn small() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=10 {
        out.push(named(GraphKind::Path, &[n], None));
        out.push(case(format!("empty[{n}]"), Graph::empty(n)));
    }
    for n in 3..=10 {
        out.push(named(GraphKind::Cycle, &[n], None));
    }
    for n in 1..=8 {
        out.push(named(GraphKind::Complete, &[n], None));
    }
    for l in 1..=9 {
        out.push(named(GraphKind::Star, &[l], None));
    }
    for s in 3..=9 {
        out.push(named(GraphKind::Wheel, &[s], None));
    }
    for sizes in [
        &[2, 2][..],
        &[3, 3],
        &[2, 2, 2],
        &[1, 2, 3],
        &[1, 1, 4],
        &[2, 2, 2, 2],
        &[5, 5],
        &[1, 9],
        &[3, 3, 3],
        &[2, 3, 4],
    ] {
        out.push(case(format!("complete_multipartite{sizes:?}"), complete_multipartite(sizes)));
    }
    for n in [4, 6, 8, 10] {
        for seed in 0..3 {
            out.push(named(GraphKind::RandomCubic, &[n], Some(seed)));
        }
    }
    let mut seed = 0;
    for n in 2..=10 {
        for percent in [15, 30, 50, 70, 90] {
            for _ in 0..3 {
                out.push(named(GraphKind::RandomGnp, &[n, percent], Some(seed)));
                seed += 1;
            }
        }
        out.push(named(GraphKind::RandomTree, &[n], Some(seed)));
        out.push(named(GraphKind::RandomTree, &[n], Some(seed + 1)));
        let (g, _) = random_split(n / 2, n - n / 2, 50, Some(seed));
        out.push(case(format!("random_split[{n}]#{seed}"), g));
        seed += 2;
    }
    out
}

/// Graphs on 11 to 16 vertices.
pub fn medium() -> Vec<Case> {
    let mut out = Vec::new();
    let mut seed = 1000;
    for n in 11..=16 {
        for percent in [15, 25, 40, 55, 75] {
            out.push(named(GraphKind::RandomGnp, &[n, percent], Some(seed)));
            seed += 1;
        }
        out.push(named(GraphKind::RandomTree, &[n], Some(seed)));
        let (g, _) = random_split(n / 3, n - n / 3, 40, Some(seed));
        out.push(case(format!("random_split[{n}]#{seed}"), g));
        seed += 1;
    }
    for n in [12, 14, 16] {
        out.push(named(GraphKind::RandomCubic, &[n], Some(seed)));
        seed += 1;
    }
    out.push(named(GraphKind::Cycle, &[13], None));
    out.push(named(GraphKind::Wheel, &[12], None));
    for sizes in [&[4, 4, 4][..], &[3, 5, 7], &[2, 2, 2, 2, 2, 2]] {
        out.push(case(format!("complete_multipartite{sizes:?}"), complete_multipartite(sizes)));
    }
    out
}
