//! Brute-force ground truth for the solvers on small instances: exhaustive
//! subset enumeration with prefix pruning (a superset of an invalid removal
//! is never valid, so pruning loses nothing), plus transitive-closure
//! comparison for reachability equivalence.

use crate::error::{Error, Result};
use crate::flow::is_lambda_connected;
use crate::graph::{EdgeId, EdgeMask, Graph};
use std::collections::BTreeSet;

const GUARD_N: usize = 12;
const GUARD_M: usize = 30;

fn guard(g: &Graph, allow_large: bool) -> Result<()> {
    if !allow_large && (g.vertex_count() > GUARD_N || g.edge_count() > GUARD_M) {
        return Err(Error::Precondition(format!(
            "oracle guard: n = {}, m = {} beyond ({}, {}); pass allow_large to override",
            g.vertex_count(),
            g.edge_count(),
            GUARD_N,
            GUARD_M
        )));
    }
    Ok(())
}

/// Largest s ≤ k_max admitting a valid s-edge deletion set avoiding
/// `forbidden`, with the lexicographically first witness of that size.
pub fn oracle_max_deletion(
    g: &Graph,
    lambda: usize,
    k_max: usize,
    forbidden: &BTreeSet<EdgeId>,
    allow_large: bool,
) -> Result<(usize, Vec<EdgeId>)> {
    guard(g, allow_large)?;
    let empty = EdgeMask::empty(g);
    if !is_lambda_connected(g, &empty, lambda)? {
        return Err(Error::NotLambdaConnected(lambda));
    }
    let candidates: Vec<EdgeId> = g.edge_ids().filter(|e| !forbidden.contains(e)).collect();
    let mut best: (usize, Vec<EdgeId>) = (0, Vec::new());
    let mut stack: Vec<EdgeId> = Vec::new();
    rec_max_deletion(
        g,
        lambda,
        k_max,
        &candidates,
        0,
        &empty,
        &mut stack,
        &mut best,
    )?;
    Ok(best)
}

fn rec_max_deletion(
    g: &Graph,
    lambda: usize,
    k_max: usize,
    candidates: &[EdgeId],
    from: usize,
    mask: &EdgeMask,
    stack: &mut Vec<EdgeId>,
    best: &mut (usize, Vec<EdgeId>),
) -> Result<()> {
    if best.0 == k_max || stack.len() == k_max {
        return Ok(());
    }
    for idx in from..candidates.len() {
        let e = candidates[idx];
        let child = mask.plus(g, e)?;
        if !is_lambda_connected(g, &child, lambda)? {
            continue;
        }
        stack.push(e);
        if stack.len() > best.0 {
            *best = (stack.len(), stack.clone());
        }
        rec_max_deletion(g, lambda, k_max, candidates, idx + 1, &child, stack, best)?;
        stack.pop();
        if best.0 == k_max {
            return Ok(());
        }
    }
    Ok(())
}

/// Maximum total weight over valid deletion sets of size ≤ k avoiding
/// `forbidden`; ties keep the set found first in lexicographic order.
pub fn oracle_max_weight(
    g: &Graph,
    lambda: usize,
    k: usize,
    forbidden: &BTreeSet<EdgeId>,
    allow_large: bool,
) -> Result<(f64, Vec<EdgeId>)> {
    guard(g, allow_large)?;
    let empty = EdgeMask::empty(g);
    if !is_lambda_connected(g, &empty, lambda)? {
        return Err(Error::NotLambdaConnected(lambda));
    }
    let candidates: Vec<EdgeId> = g.edge_ids().filter(|e| !forbidden.contains(e)).collect();
    let mut best: (f64, Vec<EdgeId>) = (0.0, Vec::new());
    let mut stack = Vec::new();
    rec_max_weight(g, lambda, k, &candidates, 0, &empty, 0.0, &mut stack, &mut best)?;
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn rec_max_weight(
    g: &Graph,
    lambda: usize,
    k: usize,
    candidates: &[EdgeId],
    from: usize,
    mask: &EdgeMask,
    weight: f64,
    stack: &mut Vec<EdgeId>,
    best: &mut (f64, Vec<EdgeId>),
) -> Result<()> {
    if stack.len() == k {
        return Ok(());
    }
    for idx in from..candidates.len() {
        let e = candidates[idx];
        let child = mask.plus(g, e)?;
        if !is_lambda_connected(g, &child, lambda)? {
            continue;
        }
        stack.push(e);
        let w = weight + g.weight(e);
        if w > best.0 {
            *best = (w, stack.clone());
        }
        rec_max_weight(g, lambda, k, candidates, idx + 1, &child, w, stack, best)?;
        stack.pop();
    }
    Ok(())
}

/// Whether removing the edges leaves every reachability relation intact.
pub fn oracle_reachability_equivalent(g: &Graph, removed: &BTreeSet<EdgeId>) -> Result<bool> {
    let full = closure(g, &EdgeMask::empty(g));
    let mask = EdgeMask::from_edges(g, removed)?;
    Ok(full == closure(g, &mask))
}

fn closure(g: &Graph, mask: &EdgeMask) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edge_ids() {
        if mask.contains(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        adj[u].push(v);
        if !g.is_directed() {
            adj[v].push(u);
        }
    }
    let mut reach = vec![vec![false; n]; n];
    for s in 0..n {
        let mut queue = std::collections::VecDeque::new();
        reach[s][s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !reach[s][v] {
                    reach[s][v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, directed: bool) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), directed).unwrap()
    }

    #[test]
    fn directed_triangle_best_is_zero() {
        let g = cycle(3, true);
        let (best, w) = oracle_max_deletion(&g, 1, 3, &BTreeSet::new(), false).unwrap();
        assert_eq!(best, 0);
        assert!(w.is_empty());
    }

    #[test]
    fn c6_best_is_one() {
        let g = cycle(6, false);
        let (best, w) = oracle_max_deletion(&g, 1, 3, &BTreeSet::new(), false).unwrap();
        assert_eq!(best, 1);
        assert_eq!(w, vec![EdgeId(0)]);
    }

    #[test]
    fn bidirected_k3_keeps_a_triangle() {
        let mut edges = Vec::new();
        for i in 0..3usize {
            for j in 0..3usize {
                if i != j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(3, edges, true).unwrap();
        let (best, w) = oracle_max_deletion(&g, 1, 6, &BTreeSet::new(), false).unwrap();
        assert_eq!(best, 3);
        let mask = EdgeMask::from_edges(&g, &w).unwrap();
        assert!(is_lambda_connected(&g, &mask, 1).unwrap());
    }

    #[test]
    fn forbidden_edges_are_skipped() {
        let g = cycle(6, false);
        let all: BTreeSet<EdgeId> = g.edge_ids().collect();
        let (best, _) = oracle_max_deletion(&g, 1, 2, &all, false).unwrap();
        assert_eq!(best, 0);
    }

    #[test]
    fn max_weight_zero_weights() {
        let g = Graph::with_weights(
            4,
            (0..4).map(|i| (i, (i + 1) % 4)).collect(),
            false,
            Some(vec![0.0; 4]),
        )
        .unwrap();
        let (w, set) = oracle_max_weight(&g, 1, 2, &BTreeSet::new(), false).unwrap();
        assert_eq!(w, 0.0);
        assert!(set.is_empty());
    }

    #[test]
    fn max_weight_c6_distinct() {
        let g = Graph::with_weights(
            6,
            (0..6).map(|i| (i, (i + 1) % 6)).collect(),
            false,
            Some(vec![3.0, 8.0, 1.0, 5.0, 2.0, 4.0]),
        )
        .unwrap();
        let (w, set) = oracle_max_weight(&g, 1, 1, &BTreeSet::new(), false).unwrap();
        assert_eq!(w, 8.0);
        assert_eq!(set, vec![EdgeId(1)]);
    }

    #[test]
    fn reachability_basics() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)], true).unwrap();
        assert!(oracle_reachability_equivalent(&g, &BTreeSet::new()).unwrap());
        // (0,2) is transitive
        let t: BTreeSet<EdgeId> = [EdgeId(2)].into_iter().collect();
        assert!(oracle_reachability_equivalent(&g, &t).unwrap());
        // (0,1) is a bridge arc
        let b: BTreeSet<EdgeId> = [EdgeId(0)].into_iter().collect();
        assert!(!oracle_reachability_equivalent(&g, &b).unwrap());
    }

    #[test]
    fn guard_rejects_large_without_override() {
        let g = cycle(14, false);
        assert!(oracle_max_deletion(&g, 1, 1, &BTreeSet::new(), false).is_err());
        assert!(oracle_max_deletion(&g, 1, 1, &BTreeSet::new(), true).is_ok());
    }

    #[test]
    fn pruned_matches_unpruned_small() {
        // pruning loses nothing: compare against a full bitmask sweep
        for (n, directed) in [(5usize, false), (5, true), (6, false)] {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.push((0, 2));
            edges.push((1, 3));
            let g = Graph::new(n, edges, directed).unwrap();
            let lambda = 1;
            let k = 3;
            let (best, witness) =
                oracle_max_deletion(&g, lambda, k, &BTreeSet::new(), false).unwrap();
            let m = g.edge_count();
            let mut brute_best = 0usize;
            for bits in 0u32..(1 << m) {
                let size = bits.count_ones() as usize;
                if size > k {
                    continue;
                }
                let set: Vec<EdgeId> =
                    (0..m).filter(|i| bits >> i & 1 == 1).map(EdgeId).collect();
                let mask = EdgeMask::from_edges(&g, &set).unwrap();
                if is_lambda_connected(&g, &mask, lambda).unwrap() && size > brute_best {
                    brute_best = size;
                }
            }
            assert_eq!(best, brute_best);
            if best > 0 {
                let mut lex_first: Option<Vec<EdgeId>> = None;
                for bits in 0u32..(1 << m) {
                    if bits.count_ones() as usize != brute_best {
                        continue;
                    }
                    let set: Vec<EdgeId> =
                        (0..m).filter(|i| bits >> i & 1 == 1).map(EdgeId).collect();
                    let mask = EdgeMask::from_edges(&g, &set).unwrap();
                    if is_lambda_connected(&g, &mask, lambda).unwrap()
                        && lex_first.as_ref().map_or(true, |cur| set < *cur)
                    {
                        lex_first = Some(set);
                    }
                }
                assert_eq!(witness, lex_first.unwrap());
            }
        }
    }
}
