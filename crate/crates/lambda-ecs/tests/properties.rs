//! Property tests for the structural invariants: mask additivity, cut
//! submodularity, max-flow/min-cut agreement, minimal-side minimality,
//! prefix-pruning soundness, and file round trips.

use lambda_ecs::flow::{is_lambda_connected, max_flow, min_cut_side};
use lambda_ecs::gen::{gen_ham_union, with_random_weights};
use lambda_ecs::graph::{
    cut_size, enumerate_cuts, submodularity_check, Cut, EdgeId, EdgeMask, Graph,
};
use proptest::prelude::*;

fn feasible_ham(n: usize, lambda: usize, extra: usize, seed: u64, directed: bool) -> Graph {
    let cycles = if directed { lambda } else { (lambda + 1) / 2 };
    let slots = if directed { n * (n - 1) } else { n * (n - 1) / 2 } - cycles * n;
    gen_ham_union(n, lambda, extra.min(slots), seed, directed).unwrap()
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<bool>()).prop_flat_map(|(n, directed)| {
        proptest::collection::vec((0..n, 0..n), 1..=3 * n)
            .prop_map(move |pairs| {
                let edges: Vec<(usize, usize)> =
                    pairs.into_iter().filter(|(u, v)| u != v).collect();
                Graph::new(n, edges, directed)
            })
            .prop_filter_map("graphs need an edge", |g| {
                g.ok().filter(|g| g.edge_count() > 0)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mask_additivity(g in arbitrary_graph(7), bits in any::<u32>(), side in any::<u32>()) {
        let n = g.vertex_count();
        let inside: Vec<usize> = (0..n).filter(|i| side >> i & 1 == 1).collect();
        prop_assume!(!inside.is_empty() && inside.len() < n);
        let x = Cut::from_vertices(&g, inside).unwrap();
        let masked: Vec<EdgeId> = g
            .edge_ids()
            .filter(|e| bits >> (e.index() % 32) & 1 == 1)
            .collect();
        let mask = EdgeMask::from_edges(&g, &masked).unwrap();
        let crossing_masked = masked.iter().filter(|&&e| x.crossed_by(&g, e)).count();
        prop_assert_eq!(
            cut_size(&g, &EdgeMask::empty(&g), &x),
            cut_size(&g, &mask, &x) + crossing_masked
        );
    }

    #[test]
    fn submodularity_always_holds(g in arbitrary_graph(6)) {
        let mask = EdgeMask::empty(&g);
        let cuts = enumerate_cuts(&g);
        for x in &cuts {
            for y in &cuts {
                prop_assert!(submodularity_check(&g, &mask, x, y));
            }
        }
    }

    #[test]
    fn max_flow_equals_exhaustive_min_cut(g in arbitrary_graph(6), s in 0usize..6, t in 0usize..6) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let mask = EdgeMask::empty(&g);
        let (value, paths) = max_flow(&g, &mask, &[s], &[t], None).unwrap();
        prop_assert!(paths.is_edge_disjoint());
        let min_cut = enumerate_cuts(&g)
            .into_iter()
            .filter(|x| x.contains(s) != x.contains(t))
            .map(|x| {
                // orient so s is inside for directed semantics
                if x.contains(s) {
                    cut_size(&g, &mask, &x)
                } else if g.is_directed() {
                    let flipped = Cut::new(&g, x.side().complement()).unwrap();
                    cut_size(&g, &mask, &flipped)
                } else {
                    cut_size(&g, &mask, &x)
                }
            })
            .min()
            .unwrap();
        prop_assert_eq!(value, min_cut);
    }

    #[test]
    fn minimal_side_is_contained_in_every_min_side(g in arbitrary_graph(6), s in 0usize..6, t in 0usize..6) {
        let n = g.vertex_count();
        let (s, t) = (s % n, t % n);
        prop_assume!(s != t);
        let mask = EdgeMask::empty(&g);
        let minimal = min_cut_side(&g, &mask, &[s], &[t], true).unwrap();
        let value = cut_size(&g, &mask, &minimal);
        for x in enumerate_cuts(&g) {
            let oriented = if x.contains(s) {
                x
            } else if !g.is_directed() {
                Cut::new(&g, x.side().complement()).unwrap()
            } else {
                continue;
            };
            if oriented.contains(s) && !oriented.contains(t)
                && cut_size(&g, &mask, &oriented) == value
            {
                prop_assert!(minimal.side().is_subset(oriented.side()));
            }
        }
    }

    #[test]
    fn prefix_pruning_soundness(seed in 0u64..500) {
        // if removing S keeps the graph lambda-connected, so does removing
        // any subset of S
        let lambda = 1 + (seed % 3) as usize;
        let directed = seed % 2 == 0;
        let n = 5 + (seed % 4) as usize;
        let g = feasible_ham(n, lambda, (seed % 5) as usize, seed, directed);
        let mask = EdgeMask::empty(&g);
        let m = g.edge_count();
        let set: Vec<EdgeId> = (0..m).filter(|i| (seed >> (i % 16)) & 1 == 1).map(EdgeId).collect();
        let full = EdgeMask::from_edges(&g, &set).unwrap();
        if is_lambda_connected(&g, &full, lambda).unwrap() {
            for skip in 0..set.len() {
                let sub: Vec<EdgeId> = set
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, e)| *e)
                    .collect();
                let sub_mask = EdgeMask::from_edges(&g, &sub).unwrap();
                prop_assert!(is_lambda_connected(&g, &sub_mask, lambda).unwrap());
            }
        }
        let _ = mask;
    }

    #[test]
    fn file_round_trip(seed in 0u64..500) {
        let lambda = 1 + (seed % 3) as usize;
        let directed = seed % 2 == 1;
        let n = 5 + (seed % 5) as usize;
        let base = feasible_ham(n, lambda, (seed % 6) as usize, seed, directed);
        let g = if seed % 3 == 0 {
            with_random_weights(&base, 9, seed)
        } else {
            base
        };
        let text = lambda_ecs::io::emit(&g);
        let parsed = lambda_ecs::io::parse_str(&text).unwrap();
        prop_assert_eq!(parsed, g);
    }
}
