//! Top-level decision procedure: dispatch on direction and parity, then
//! exhaust the certificate's candidate set when the structural solvers stop
//! short. Also the minimum-equivalent-digraph front-end, which reduces to
//! per-component λ = 1 searches plus a transitive reduction of the
//! condensation.

use crate::error::{Error, Result};
use crate::flow::is_lambda_connected;
use crate::graph::{EdgeId, EdgeMask, Graph};
use crate::oracle::oracle_reachability_equivalent;
use crate::solver::{
    solve_directed, solve_even, solve_odd, BoundCertificate, DeletionSet, SolveOutcome,
};
use std::collections::BTreeSet;

/// Shared knobs for the search pipeline.
#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Cap on nodes explored during candidate-subset enumeration.
    pub enum_budget: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            enum_budget: 100_000_000,
        }
    }
}

/// What happened on the way to the answer.
#[derive(Clone, Debug, Default)]
pub struct SolveReport {
    /// Edges marked irrelevant by the odd solver.
    pub markings: usize,
    /// Irrelevant-set size at the end (odd case; undeletable edges included).
    pub irrelevant_count: usize,
    /// Candidate count of the certificate, when one was emitted.
    pub candidate_count: Option<usize>,
    /// Structural bound attached to the certificate.
    pub certificate_bound: Option<usize>,
    /// Whether the answer came straight from the structural solver rather
    /// than the exhaustive step.
    pub solver_found: bool,
}

/// Finds a verified k-edge deletion set of a λ-connected (di)graph, or
/// proves there is none.
pub fn find_deletion_set(
    g: &Graph,
    lambda: usize,
    k: usize,
    cfg: &SolveConfig,
) -> Result<Option<DeletionSet>> {
    find_deletion_set_with_report(g, lambda, k, cfg).map(|(ds, _)| ds)
}

/// Same, returning diagnostics about certificates and irrelevant markings.
pub fn find_deletion_set_with_report(
    g: &Graph,
    lambda: usize,
    k: usize,
    cfg: &SolveConfig,
) -> Result<(Option<DeletionSet>, SolveReport)> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut report = SolveReport::default();
    let outcome = if g.is_directed() {
        solve_directed(g, lambda, k)?
    } else if lambda % 2 == 0 {
        solve_even(g, lambda, k)?
    } else {
        let (outcome, diag) = solve_odd(g, lambda, k)?;
        report.markings = diag.markings.len();
        report.irrelevant_count = diag.irrelevant.len();
        outcome
    };
    match outcome {
        SolveOutcome::Found(ds) => {
            report.solver_found = true;
            Ok((Some(ds), report))
        }
        SolveOutcome::Certificate(cert) => {
            report.candidate_count = Some(cert.candidates.len());
            report.certificate_bound = Some(cert.bound);
            let found = enumerate_k_subsets(g, lambda, k, &cert, cfg.enum_budget)?;
            Ok((found, report))
        }
    }
}

/// Lexicographic DFS over k-subsets of the certificate candidates with
/// prefix pruning; the first verified k-set wins.
fn enumerate_k_subsets(
    g: &Graph,
    lambda: usize,
    k: usize,
    cert: &BoundCertificate,
    budget: u64,
) -> Result<Option<DeletionSet>> {
    let candidates: Vec<EdgeId> = cert.candidates.iter().copied().collect();
    if candidates.len() < k {
        return Ok(None);
    }
    let mut nodes = 0u64;
    let mut stack = Vec::new();
    let found = enum_rec(
        g,
        lambda,
        k,
        &candidates,
        0,
        &EdgeMask::empty(g),
        &mut stack,
        &mut nodes,
        budget,
    )?;
    match found {
        Some(edges) => Ok(Some(DeletionSet::verified_new(
            g,
            &EdgeMask::empty(g),
            lambda,
            edges,
        )?)),
        None => Ok(None),
    }
}

#[allow(clippy::too_many_arguments)]
fn enum_rec(
    g: &Graph,
    lambda: usize,
    k: usize,
    candidates: &[EdgeId],
    from: usize,
    mask: &EdgeMask,
    stack: &mut Vec<EdgeId>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<EdgeId>>> {
    if stack.len() == k {
        return Ok(Some(stack.clone()));
    }
    let needed = k - stack.len();
    if candidates.len() - from < needed {
        return Ok(None);
    }
    for idx in from..candidates.len() {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let e = candidates[idx];
        let child = mask.plus(g, e)?;
        if !is_lambda_connected(g, &child, lambda)? {
            continue;
        }
        stack.push(e);
        if let Some(hit) =
            enum_rec(g, lambda, k, candidates, idx + 1, &child, stack, nodes, budget)?
        {
            return Ok(Some(hit));
        }
        stack.pop();
    }
    Ok(None)
}

/// A set of arcs whose removal keeps every reachability relation of the
/// digraph, verified by transitive-closure comparison.
#[derive(Clone, Debug)]
pub struct MedDeletion {
    pub edges: Vec<EdgeId>,
    pub verified: bool,
}

/// Maximum redundant-arc extraction: transitive reduction of the strongly-
/// connected-component condensation plus λ = 1 deletion searches inside
/// each component. Returns the combined set when it reaches k arcs.
pub fn minimum_equivalent_digraph(
    g: &Graph,
    k: usize,
    cfg: &SolveConfig,
) -> Result<Option<MedDeletion>> {
    if !g.is_directed() {
        return Err(Error::Precondition(
            "minimum_equivalent_digraph needs a digraph".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let comp_of = strongly_connected_components(g);
    let comp_count = comp_of.iter().copied().max().map_or(0, |c| c + 1);
    let mut removable: Vec<EdgeId> = Vec::new();

    // inter-component arcs: keep one arc per needed condensation pair
    let mut pair_arcs: std::collections::BTreeMap<(usize, usize), Vec<EdgeId>> =
        std::collections::BTreeMap::new();
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv {
            pair_arcs.entry((cu, cv)).or_default().push(e);
        }
    }
    let needed = condensation_transitive_reduction(comp_count, pair_arcs.keys().copied());
    for (pair, arcs) in &pair_arcs {
        let keep_first = needed.contains(pair);
        for (i, &a) in arcs.iter().enumerate() {
            if !(keep_first && i == 0) {
                removable.push(a);
            }
        }
    }

    // intra-component arcs: per-component lambda = 1 searches with growing k
    for c in 0..comp_count {
        let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| comp_of[v] == c).collect();
        if vertices.len() < 2 {
            continue;
        }
        let mut local_of = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local_of[v] = i;
        }
        let mut local_edges = Vec::new();
        let mut back_map = Vec::new();
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            if comp_of[u] == c && comp_of[v] == c {
                local_edges.push((local_of[u], local_of[v]));
                back_map.push(e);
            }
        }
        let cap = local_edges.len().saturating_sub(vertices.len());
        let sub = Graph::new(vertices.len(), local_edges, true)?;
        let mut best: Vec<EdgeId> = Vec::new();
        for kk in 1..=cap {
            match find_deletion_set(&sub, 1, kk, cfg)? {
                Some(ds) => best = ds.edges,
                None => break,
            }
        }
        removable.extend(best.iter().map(|e| back_map[e.index()]));
    }

    if removable.len() < k {
        return Ok(None);
    }
    removable.sort();
    let as_set: BTreeSet<EdgeId> = removable.iter().copied().collect();
    if !oracle_reachability_equivalent(g, &as_set)? {
        return Err(Error::InternalInconsistency(
            "combined removable set broke reachability".into(),
        ));
    }
    Ok(Some(MedDeletion {
        edges: removable,
        verified: true,
    }))
}

/// Tarjan's algorithm, iterative. Returns the component index per vertex;
/// indices are in reverse topological order of the condensation.
pub fn strongly_connected_components(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        adj[u].push(v);
        if !g.is_directed() {
            adj[v].push(u);
        }
    }
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps = 0usize;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        // explicit DFS frames: (vertex, next adjacency position)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&(v, pos)) = call.last() {
            if pos == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if pos < adj[v].len() {
                let w = adj[v][pos];
                call.last_mut().unwrap().1 += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = comps;
                        if w == v {
                            break;
                        }
                    }
                    comps += 1;
                }
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    comp
}

/// Needed edges of a DAG given as distinct pairs: drop every pair implied by
/// a longer route.
fn condensation_transitive_reduction(
    comp_count: usize,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> BTreeSet<(usize, usize)> {
    let pair_list: Vec<(usize, usize)> = pairs.collect();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); comp_count];
    for &(a, b) in &pair_list {
        out[a].push(b);
    }
    // reachability closure on the condensation
    let mut reach: Vec<Vec<bool>> = vec![vec![false; comp_count]; comp_count];
    for s in 0..comp_count {
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &out[u] {
                if !reach[s][v] {
                    reach[s][v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    pair_list
        .into_iter()
        .filter(|&(a, b)| !out[a].iter().any(|&c| c != b && reach[c][b]))
        .collect()
}
