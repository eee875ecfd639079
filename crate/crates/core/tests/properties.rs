mod common;

use std::time::Duration;

use itertools::Itertools;
use proptest::prelude::*;
use srd_core::exact::{decide_bb, BbOptions};
use srd_core::generate::{generate, GraphKind};
use srd_core::nd::{
    achievable_weights, check_guess_feasible, enumerate_guesses, nd_partition, realize_labeling, same_type,
    solve_guess_ilp, ClassKind, Flags,
};
use srd_core::reductions::{
    forward_label_gadget, forward_label_mrss, forward_label_rbds, gadget::gadget_size, oracle_ds, oracle_mrss,
    oracle_rbds, reduce_ds_cubic_to_split, reduce_ds_gadget, reduce_mrss_to_fvs, reduce_rbds_to_vc, MrssInstance,
    RbdsInstance,
};
use srd_core::srdf::lower_bound_by_components;
use srd_core::{is_valid_srdf, solve_bb, solve_brute, solve_nd, weight, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let len = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), len))
            .prop_map(|(n, pairs, keep)| {
                let edges = pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

fn arb_connected_no_isolated(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("needs n >= 2 and no isolated vertex", |g| {
        g.n() >= 2 && g.vertices().all(|v| g.degree(v) > 0)
    })
}

/// Minimum over every feasible guess, without any pruning across guesses.
fn nd_by_plain_enumeration(g: &Graph) -> i64 {
    let p = nd_partition(g);
    enumerate_guesses(&p)
        .filter(|gv| check_guess_feasible(&p, gv))
        .filter_map(|gv| solve_guess_ilp(&p, &gv))
        .map(|s| s.total)
        .min()
        .expect("the all-1 guess is always feasible")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn solvers_agree(g in arb_graph(10)) {
        let brute = solve_brute(&g).unwrap();
        let bb = solve_bb(&g, None).unwrap();
        let nd = solve_nd(&g).unwrap();
        prop_assert_eq!(brute.optimum, bb.optimum);
        prop_assert_eq!(brute.optimum, nd.optimum);
        prop_assert!(bb.certified);
        for r in [&brute, &bb, &nd] {
            prop_assert!(is_valid_srdf(&g, &r.witness).valid);
            prop_assert_eq!(weight(&r.witness), r.optimum);
        }
        prop_assert!(lower_bound_by_components(&g) <= brute.optimum);
        prop_assert!(brute.optimum <= g.n() as i64);
    }

    #[test]
    fn brute_witness_is_lexicographically_first(g in arb_graph(6)) {
        let r = solve_brute(&g).unwrap();
        let first = (0..g.n())
            .map(|_| [-1i64, 1, 2])
            .multi_cartesian_product()
            .map(|v| srd_core::Labeling::from_values(&v).unwrap()).find(|f| is_valid_srdf(&g, f).valid && weight(f) == r.optimum);
        // The empty graph has exactly one (empty) labeling.
        let first = first.unwrap_or_else(|| srd_core::Labeling::new(vec![]));
        prop_assert_eq!(r.witness, first);
    }

    #[test]
    fn nd_matches_plain_guess_enumeration(g in arb_graph(8)) {
        prop_assert_eq!(solve_nd(&g).unwrap().optimum, nd_by_plain_enumeration(&g));
    }

    #[test]
    fn realized_guess_solutions_are_valid(g in arb_graph(7)) {
        let p = nd_partition(&g);
        for gv in enumerate_guesses(&p).filter(|gv| check_guess_feasible(&p, gv)) {
            if let Some(sol) = solve_guess_ilp(&p, &gv) {
                let f = realize_labeling(&p, &gv, &sol.weights).unwrap();
                prop_assert!(is_valid_srdf(&g, &f).valid, "guess {:?}", gv);
                prop_assert_eq!(weight(&f), sol.total);
            }
        }
    }

    #[test]
    fn nd_partition_is_a_coarsest_type_partition(g in arb_graph(12)) {
        let p = nd_partition(&g);
        let mut seen = vec![false; g.n()];
        for (i, class) in p.classes().iter().enumerate() {
            for &u in class {
                prop_assert!(!seen[u]);
                seen[u] = true;
                prop_assert_eq!(p.class_of(u), i);
                for &v in class {
                    prop_assert!(u == v || same_type(&g, u, v));
                }
            }
            let clique = class.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v));
            if class.len() >= 2 {
                prop_assert_eq!(p.kind(i) == ClassKind::Clique, clique);
            } else {
                prop_assert_eq!(p.kind(i), ClassKind::Independent);
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        for (i, j) in (0..p.t()).tuple_combinations() {
            prop_assert!(!same_type(&g, p.class(i)[0], p.class(j)[0]));
            let cross = p.class(i).iter().cartesian_product(p.class(j)).filter(|(&u, &v)| g.has_edge(u, v)).count();
            let all = p.class(i).len() * p.class(j).len();
            prop_assert!(cross == 0 || cross == all);
            prop_assert_eq!(p.adjacent(i, j), cross == all);
        }
    }

    #[test]
    fn achievable_weights_are_exact(size in 1usize..12, mask in 1u8..8) {
        let flags = Flags::from_mask(mask);
        prop_assume!(flags.count() <= size);
        let got = achievable_weights(size, flags).unwrap();
        let mut expected: Vec<i64> = (0..=size)
            .flat_map(|p| (0..=size - p).map(move |r| (p, size - p - r, r)))
            .filter(|&(p, q, r)| (p > 0) == flags.minus && (q > 0) == flags.one && (r > 0) == flags.two)
            .map(|(p, q, r)| -(p as i64) + q as i64 + 2 * r as i64)
            .collect();
        expected.sort_unstable();
        expected.dedup();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn gadget_forward_direction(g in arb_connected_no_isolated(7)) {
        let s = oracle_ds(&g, g.n()).unwrap().unwrap();
        let red = reduce_ds_gadget(&g, s.len()).unwrap();
        let f = forward_label_gadget(&red, &s).unwrap();
        prop_assert!(is_valid_srdf(&red.output.graph, &f).valid);
        prop_assert_eq!(weight(&f), s.len() as i64);
        let expected_n: usize = g.n() + g.vertices().map(|v| gadget_size(g.degree(v))).sum::<usize>();
        prop_assert_eq!(red.output.graph.n(), expected_n);
        let expected_m: usize = g.m() + g.vertices().map(|v| 6 * (g.degree(v) + 1) + 1).sum::<usize>();
        prop_assert_eq!(red.output.graph.m(), expected_m);
        if let Some(w) = &red.output.witness {
            prop_assert!(w.validates(&red.output.graph));
        }
    }
}

/// `(x, y, percent, k, seed)` drawn into a nondegenerate instance, if possible.
fn rbds_from(x: usize, y: usize, percent: u32, k: usize, seed: u64) -> Option<RbdsInstance> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..x)
        .cartesian_product(0..y)
        .filter(|_| rng.gen_range(0..100) < percent)
        .collect();
    RbdsInstance::new(x, y, edges, k.clamp(1, x)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rbds_forward_direction(x in 1usize..6, y in 1usize..6, percent in 20u32..90, k in 1usize..6, seed in any::<u64>()) {
        let Some(inst) = rbds_from(x, y, percent, k, seed) else { return Ok(()); };
        let red = reduce_rbds_to_vc(&inst).unwrap();
        let out = &red.output;
        prop_assert_eq!(out.graph.n(), 3 * x + 8 * y);
        prop_assert_eq!(out.graph.m(), 4 * inst.edges.len() + 6 * y);
        prop_assert!(out.witness.as_ref().unwrap().validates(&out.graph));
        if let Some(s) = oracle_rbds(&inst).unwrap() {
            let f = forward_label_rbds(&red, &s).unwrap();
            prop_assert!(is_valid_srdf(&out.graph, &f).valid);
            prop_assert_eq!(weight(&f), inst.k_prime() - 4 * (inst.k - s.len()) as i64);
        }
    }

    #[test]
    fn rbds_text_round_trip(x in 1usize..6, y in 1usize..6, percent in 20u32..90, k in 1usize..6, seed in any::<u64>()) {
        let Some(inst) = rbds_from(x, y, percent, k, seed) else { return Ok(()); };
        prop_assert_eq!(RbdsInstance::parse(&inst.to_text()).unwrap(), inst);
    }

    #[test]
    fn mrss_forward_direction(
        vectors in proptest::collection::vec(proptest::collection::vec(0u64..3, 2), 1..4),
        target in proptest::collection::vec(1u64..5, 2),
        m in 1usize..4,
    ) {
        prop_assume!(vectors.iter().all(|v| v.iter().any(|&c| c > 0)));
        let inst = MrssInstance { k: 2, m: m.min(vectors.len()), vectors, target };
        let red = reduce_mrss_to_fvs(&inst).unwrap();
        let out = &red.output;
        prop_assert!(out.witness.as_ref().unwrap().validates(&out.graph));

        let per_coord: usize = (0..inst.k).map(|j| {
            let d = inst.column_total(j);
            4 + d + 3 * d.div_ceil(2)
        }).sum();
        let per_vector: usize = (0..inst.vectors.len()).map(|i| 1 + 13 * inst.max_coordinate(i)).sum();
        prop_assert_eq!(out.graph.n(), per_coord + per_vector);
        let coord_edges: usize = (0..inst.k).map(|j| {
            let d = inst.column_total(j);
            2 + 2 * d + 3 * d.div_ceil(2)
        }).sum();
        let vector_edges: usize = inst.vectors.iter().enumerate()
            .map(|(i, s)| 13 * inst.max_coordinate(i) + s.iter().sum::<u64>() as usize)
            .sum();
        prop_assert_eq!(out.graph.m(), coord_edges + vector_edges);

        if let Some(s) = oracle_mrss(&inst).unwrap() {
            let f = forward_label_mrss(&red, &s).unwrap();
            prop_assert!(is_valid_srdf(&out.graph, &f).valid);
            prop_assert_eq!(weight(&f), out.k_prime - (inst.m - s.len()) as i64);
        }
    }
}

#[test]
fn split_sizes_follow_the_closed_form() {
    for (n, seed) in [(4, 0), (6, 1), (8, 2), (10, 3)] {
        let g = if n == 4 {
            generate(GraphKind::Complete, &[4], None).unwrap()
        } else {
            generate(GraphKind::RandomCubic, &[n], Some(seed)).unwrap()
        };
        for k in 1..=n {
            let red = reduce_ds_cubic_to_split(&g, k).unwrap();
            let s = (2 * n + 4 - k).div_ceil(2);
            let clique = 4 * n + s;
            assert_eq!(red.output.graph.n(), 5 * n + 3 * s);
            assert_eq!(red.output.graph.m(), clique * (clique - 1) / 2 + 3 * n + 4 * n + 2 * s);
            assert!(red.output.witness.as_ref().unwrap().validates(&red.output.graph));
        }
    }
}

#[test]
fn achievable_weights_fit_the_interval_bounds() {
    // (minus, one, two) -> inclusive interval as a function of the class size.
    type Bound = fn(i64) -> (i64, i64);
    let cases: [(u8, i64, Bound); 4] = [
        (0b011, 2, |s| (s + 1, 2 * s - 1)),
        (0b111, 3, |s| (-s + 5, 2 * s - 4)),
        (0b110, 2, |s| (-s + 2, s - 2)),
        (0b101, 2, |s| (-s + 3, 2 * s - 3)),
    ];
    for (mask, min_size, bound) in cases {
        for size in min_size..=15 {
            let set = achievable_weights(size as usize, Flags::from_mask(mask)).unwrap();
            let (lo, hi) = bound(size);
            assert!(set.iter().all(|w| (lo..=hi).contains(w)), "mask {mask:03b} size {size}");
            assert_eq!((set[0], *set.last().unwrap()), (lo, hi), "mask {mask:03b} size {size}");
        }
    }
}

#[test]
fn gadget_reverse_direction_on_small_sources() {
    for (kind, n) in [(GraphKind::Path, 2), (GraphKind::Path, 3), (GraphKind::Star, 3)] {
        let g = generate(kind, &[n], None).unwrap();
        for k in 1..=g.n() {
            let red = reduce_ds_gadget(&g, k).unwrap();
            let opts = BbOptions {
                incumbent: None,
                timeout: Some(Duration::from_secs(60)),
            };
            let d = decide_bb(&red.output.graph, k as i64, &opts).unwrap();
            let expected = oracle_ds(&g, k).unwrap().is_some();
            if let Some(answer) = d.answer {
                assert_eq!(answer, expected, "{kind}{n} k={k}");
            }
        }
    }
}

#[test]
fn corpus_lower_bounds_hold_for_medium_graphs() {
    for case in common::medium() {
        let r = solve_nd(&case.graph).unwrap();
        assert!(lower_bound_by_components(&case.graph) <= r.optimum, "{}", case.name);
    }
}
