//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its headline numbers. The randomized sweep is shared between criteria so
//! the decision-agreement, bound-conformance, and consistency checks all see
//! the same instances.

use lambda_ecs::gen::{gen_blob_cycle, gen_ham_union, with_random_weights};
use lambda_ecs::graph::{
    crossing_edges, cut_size, enumerate_cuts, EdgeId, EdgeMask, Graph,
};
use lambda_ecs::oracle::{
    oracle_max_deletion, oracle_max_weight, oracle_reachability_equivalent,
};
use lambda_ecs::pipeline::{
    find_deletion_set_with_report, minimum_equivalent_digraph, SolveConfig,
};
use lambda_ecs::solver::{solve_odd, SolveOutcome};
use std::collections::BTreeSet;
use std::sync::OnceLock;

const LAMBDAS: [usize; 3] = [1, 2, 3];
const KS: [usize; 4] = [1, 2, 3, 4];
const SEEDS_PER_COMBO: u64 = 45; // 45 × 12 = 540 instances per configuration

fn min_n(lambda: usize, directed: bool) -> usize {
    if directed {
        // a complete digraph on 4 vertices has no 3-cycle decomposition, so
        // keep one spare vertex beyond the lambda disjoint cycles
        if lambda >= 3 {
            lambda + 2
        } else {
            lambda + 1
        }
    } else {
        2 * ((lambda + 1) / 2) + 1
    }
}

/// Seeded ham-union instance with feasible size and extra-edge count.
fn ham_instance(directed: bool, lambda: usize, s: u64, salt: u64, n_cap: usize) -> Graph {
    let lo = min_n(lambda, directed).max(4);
    let n = lo + (s as usize % (n_cap + 1 - lo));
    let cycles = if directed { lambda } else { (lambda + 1) / 2 };
    let slots = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
    let cap = (slots - cycles * n).min(10);
    let extra = if cap == 0 {
        0
    } else {
        (s as usize * 3 + salt as usize) % (cap + 1)
    };
    gen_ham_union(n, lambda, extra, s * 1_000_003 + salt, directed).unwrap()
}

struct SweepStats {
    instances: usize,
    certificates: usize,
    bound_violations: usize,
    marking_events: usize,
}

fn sweep() -> &'static SweepStats {
    static SWEEP: OnceLock<SweepStats> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let cfg = SolveConfig::default();
        let mut stats = SweepStats {
            instances: 0,
            certificates: 0,
            bound_violations: 0,
            marking_events: 0,
        };
        for directed in [true, false] {
            for lambda in LAMBDAS {
                for k in KS {
                    for s in 0..SEEDS_PER_COMBO {
                        let g =
                            ham_instance(directed, lambda, s, (lambda * 17 + k) as u64, 10);
                        check_decision(&g, lambda, k, &cfg, &mut stats);
                    }
                }
            }
        }
        // blob cycles take odd lambda by construction
        for lambda in [1usize, 3] {
            for k in KS {
                for s in 0..(SEEDS_PER_COMBO * 3 / 2) {
                    let blocks = 3 + (s as usize % 4); // 3..=6
                    let block_size = 1 + (s as usize / 4 % 3); // 1..=3
                    let seed = s * 7_919 + (lambda * 23 + k) as u64;
                    let g = gen_blob_cycle(blocks, block_size, lambda, seed).unwrap();
                    check_decision(&g, lambda, k, &cfg, &mut stats);
                }
            }
        }
        stats
    })
}

fn check_decision(
    g: &Graph,
    lambda: usize,
    k: usize,
    cfg: &SolveConfig,
    stats: &mut SweepStats,
) {
    stats.instances += 1;
    let (found, report) = find_deletion_set_with_report(g, lambda, k, cfg)
        .expect("no internal inconsistency or budget blowup on the sweep");
    let (best, _) = oracle_max_deletion(g, lambda, k, &BTreeSet::new(), true).unwrap();
    assert_eq!(
        found.is_some(),
        best >= k,
        "decision mismatch: n={} m={} directed={} lambda={} k={}\n{}",
        g.vertex_count(),
        g.edge_count(),
        g.is_directed(),
        lambda,
        k,
        lambda_ecs::io::emit(g),
    );
    if let Some(ds) = &found {
        assert!(ds.verified);
        assert_eq!(ds.edges.len(), k);
    }
    if let (Some(count), Some(bound)) = (report.candidate_count, report.certificate_bound) {
        stats.certificates += 1;
        if count > bound {
            stats.bound_violations += 1;
        }
    }
    stats.marking_events += report.markings;
}

#[test]
fn criterion_1_oracle_decision_agreement() {
    let stats = sweep();
    assert!(stats.instances >= 3 * 500);
    println!(
        "criterion 1 PASS: {} instances, decision agreement 100%",
        stats.instances
    );
}

#[test]
fn criterion_2_weighted_optimality() {
    let mut checked = 0;
    for directed in [true, false] {
        for lambda in LAMBDAS {
            for k in [1usize, 2, 3] {
                for s in 0..12u64 {
                    let base = ham_instance(directed, lambda, s, (lambda * 31 + k) as u64, 9);
                    let g = with_random_weights(&base, 9, s * 104_729 + k as u64);
                    let sol = lambda_ecs::solver::solve_weighted(&g, lambda, k, 100_000_000)
                        .unwrap();
                    let (best, _) =
                        oracle_max_weight(&g, lambda, k, &BTreeSet::new(), true).unwrap();
                    assert_eq!(
                        sol.weight,
                        best,
                        "weight mismatch on n={} m={} directed={} lambda={} k={}\n{}",
                        g.vertex_count(),
                        g.edge_count(),
                        directed,
                        lambda,
                        k,
                        lambda_ecs::io::emit(&g),
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 200);
    println!("criterion 2 PASS: {} weighted instances match the oracle", checked);
}

#[test]
fn criterion_3_cycle_family() {
    let cfg = SolveConfig::default();
    for n in 5..=12usize {
        let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false).unwrap();
        let (found, _) = find_deletion_set_with_report(&g, 1, 1, &cfg).unwrap();
        let ds = found.expect("one edge of a cycle is deletable");
        assert_eq!(ds.edges.len(), 1);
        assert!(ds.verified);
        let (found2, report2) = find_deletion_set_with_report(&g, 1, 2, &cfg).unwrap();
        assert!(found2.is_none(), "no 2-set exists in C{}", n);
        assert!(
            report2.markings >= 1 || report2.certificate_bound.is_some(),
            "the odd solver must mark or certify before the exhaustive step"
        );
    }
    println!("criterion 3 PASS: cycles n=5..=12, k=1 YES / k=2 NO");
}

#[test]
fn criterion_4_structural_bounds() {
    let stats = sweep();
    assert!(stats.certificates > 0, "the sweep must exercise certificates");
    assert_eq!(stats.bound_violations, 0);
    println!(
        "criterion 4 PASS: {} certificates, all within their structural bound",
        stats.certificates
    );
}

#[test]
fn criterion_5_cut_chain_invariants() {
    use lambda_ecs::chain::{build_chain, witness_edges};
    let mut built = 0;
    let mut exhaustive = 0;

    let mut instances: Vec<(Graph, usize, EdgeId)> = Vec::new();
    // plain cycles, lambda = 1: D(e0) is the rest of the cycle
    for n in 4..=12usize {
        let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false).unwrap();
        instances.push((g, 1, EdgeId(0)));
    }
    // doubled cycles, lambda = 3: removing one copy tightens every ring cut
    for n in 4..=12usize {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, (i + 1) % n));
        }
        instances.push((Graph::new(n, edges, false).unwrap(), 3, EdgeId(0)));
    }
    // doubled paths with an end-to-end chord, lambda = 2
    for n in 4..=10usize {
        let mut edges = vec![(0, n - 1)];
        for i in 0..n - 1 {
            edges.push((i, i + 1));
            edges.push((i, i + 1));
        }
        instances.push((Graph::new(n, edges, false).unwrap(), 2, EdgeId(0)));
    }
    // directed doubled cycles, lambda = 1: only the parallel partner turns
    // undeletable, giving the single-cut chain
    for n in 4..=10usize {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, (i + 1) % n));
        }
        instances.push((Graph::new(n, edges, true).unwrap(), 1, EdgeId(0)));
    }

    for (g, lambda, e_star) in instances {
        let empty = EdgeMask::empty(&g);
        let d = lambda_ecs::classify::newly_undeletable(&g, &empty, lambda, e_star, None)
            .unwrap();
        assert!(d.len() >= lambda, "construction must leave room for a chain");
        // every feasible chain length up to a small cap
        for ell in 1..=(d.len() / lambda).min(5) {
            let w = witness_edges(&g, &empty, lambda, e_star, ell, None).unwrap();
            // build_chain re-validates every chain invariant internally and
            // fails hard on any violation
            let chain = build_chain(&g, &empty, lambda, &w).unwrap();
            assert_eq!(chain.len(), ell);
            built += 1;

            if g.vertex_count() <= 7 {
                // exhaustive lambda-cut check of the one-witness property
                let star = empty.plus(&g, e_star).unwrap();
                let members: BTreeSet<EdgeId> = w.edges.iter().copied().collect();
                for x in enumerate_cuts(&g) {
                    if cut_size(&g, &star, &x) == lambda
                        && x.separates(g.is_directed(), w.u_star, w.v_star)
                    {
                        let hits = crossing_edges(&g, &star, &x)
                            .into_iter()
                            .filter(|e| members.contains(e))
                            .count();
                        assert!(hits <= 1, "cut crossed by {} witnesses", hits);
                    }
                }
                exhaustive += 1;
            }
        }
    }
    assert!(built >= 100, "built {} chains", built);
    assert!(exhaustive >= 10);
    println!(
        "criterion 5 PASS: {} chains validated, {} with exhaustive cut checks",
        built, exhaustive
    );
}

#[test]
fn criterion_6_irrelevance_soundness() {
    // markings need |D(e*)| > eta(k)·lambda = 43 at k = 2, so they appear on
    // long cycles; every event is checked against the oracle on both sides
    let mut events = 0;
    for n in [46usize, 50, 57] {
        let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false).unwrap();
        let (out, diag) = solve_odd(&g, 1, 2).unwrap();
        assert!(matches!(out, SolveOutcome::Certificate(_)));
        assert!(!diag.markings.is_empty());
        for ev in &diag.markings {
            let (before_best, _) = oracle_max_deletion(&g, 1, 2, &ev.before, true).unwrap();
            let mut after = ev.before.clone();
            after.insert(ev.marked);
            let (after_best, _) = oracle_max_deletion(&g, 1, 2, &after, true).unwrap();
            assert_eq!(before_best >= 2, after_best >= 2, "marking broke the contract");
            events += 1;
        }
    }
    // the randomized small-instance sweep cannot reach the marking threshold,
    // so its zero-event tally is consistent by construction
    let stats = sweep();
    println!(
        "criterion 6 PASS: {} marking events oracle-checked, {} on the small sweep",
        events, stats.marking_events
    );
}

#[test]
fn criterion_7_submodularity_and_odd_uncrossing() {
    use lambda_ecs::graph::submodularity_check;
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 4..=6usize {
        graphs.push(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false).unwrap());
        graphs.push(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), true).unwrap());
    }
    for seed in 0..6u64 {
        graphs.push(gen_ham_union(5, 2, 3, seed, false).unwrap());
        graphs.push(gen_ham_union(6, 2, seed as usize % 5, seed, true).unwrap());
        graphs.push(gen_ham_union(5, 1, 4, seed + 100, false).unwrap());
    }
    graphs.push(gen_blob_cycle(3, 2, 3, 5).unwrap());
    graphs.push(gen_blob_cycle(4, 1, 1, 5).unwrap());

    let mut pairs = 0usize;
    for g in &graphs {
        assert!(g.vertex_count() <= 6);
        let mask = EdgeMask::empty(g);
        let cuts = enumerate_cuts(g);
        for x in &cuts {
            for y in &cuts {
                assert!(submodularity_check(g, &mask, x, y));
                pairs += 1;
            }
        }
        if !g.is_directed() {
            let lambda = lambda_ecs::flow::edge_connectivity(g, &mask).unwrap();
            if lambda % 2 == 1 {
                let lambda_cuts: Vec<_> = cuts
                    .iter()
                    .filter(|x| cut_size(g, &mask, x) == lambda)
                    .collect();
                for x in &lambda_cuts {
                    for y in &lambda_cuts {
                        let uni = x.side().union(y.side());
                        if uni.count() == g.vertex_count() {
                            continue;
                        }
                        let nested_or_disjoint = x.side().is_subset(y.side())
                            || y.side().is_subset(x.side())
                            || x.side().is_disjoint(y.side());
                        assert!(nested_or_disjoint, "odd lambda-cuts must be laminar");
                    }
                }
            }
        }
    }
    println!(
        "criterion 7 PASS: {} cut pairs over {} graphs, zero violations",
        pairs,
        graphs.len()
    );
}

#[test]
fn criterion_8_no_internal_inconsistencies() {
    // every theorem-backed check in the sweep surfaces as an error and would
    // have failed criterion 1 already; re-assert through the shared stats
    let stats = sweep();
    assert_eq!(stats.bound_violations, 0);
    assert!(stats.instances > 0);
    println!(
        "criterion 8 PASS: {} instances, zero internal-inconsistency events",
        stats.instances
    );
}

#[test]
fn criterion_9_minimum_equivalent_digraph() {
    let cfg = SolveConfig::default();
    for n in [3usize, 4, 5] {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, edges, true).unwrap();
        let expect = n * (n - 1) - n;
        let med = minimum_equivalent_digraph(&g, expect, &cfg)
            .unwrap()
            .unwrap_or_else(|| panic!("K{} bidirected must shed {} arcs", n, expect));
        assert_eq!(med.edges.len(), expect);
        assert!(med.verified);
        assert!(minimum_equivalent_digraph(&g, expect + 1, &cfg).unwrap().is_none());

        if n <= 4 {
            // cross-check the maximum against reachability-validated enumeration
            let m = g.edge_count();
            let mut brute_best = 0usize;
            for bits in 0u32..(1 << m) {
                let size = bits.count_ones() as usize;
                if size <= brute_best {
                    continue;
                }
                let set: BTreeSet<EdgeId> =
                    (0..m).filter(|i| bits >> i & 1 == 1).map(EdgeId).collect();
                if oracle_reachability_equivalent(&g, &set).unwrap() {
                    brute_best = size;
                }
            }
            assert_eq!(brute_best, expect);
        } else {
            // certificate verification for K5
            let set: BTreeSet<EdgeId> = med.edges.iter().copied().collect();
            assert!(oracle_reachability_equivalent(&g, &set).unwrap());
        }
    }
    println!("criterion 9 PASS: bidirected K3/K4/K5 shed n(n-1)-n arcs");
}
