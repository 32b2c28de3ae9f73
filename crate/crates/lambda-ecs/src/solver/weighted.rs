//! Maximum-weight deletion sets of size at most k.
//!
//! Some maximum-weight solution always touches the heaviest-candidate set W
//! of the current graph (λk² candidates for digraphs, 2λk² for even λ, 7λk³
//! for odd λ after irrelevant-edge marking), so the search branches on W,
//! removes the picked edge, and recurses with a freshly computed W — a fixed
//! top-level W is not enough, since the optimum may pair one heavy edge with
//! arbitrarily light ones outside it. Branches explore candidates by weight
//! descending and are cut once even the best remaining completion cannot
//! beat the incumbent. Every prefix consists of edges deletable at the time
//! they were picked, so every visited set is already verified.

use crate::classify::classify_edges;
use crate::error::{Error, Result};
use crate::flow::is_lambda_connected;
use crate::graph::{EdgeId, EdgeMask, Graph};
use crate::solver::odd::{solve_odd_step_masked, IrrelevantSet, OddStep};
use std::collections::BTreeSet;

/// A verified deletion set of size ≤ k with its total weight.
#[derive(Clone, Debug)]
pub struct WeightedSolution {
    pub edges: Vec<EdgeId>,
    pub weight: f64,
    pub lambda: usize,
    pub verified: bool,
}

/// The `limit` heaviest deletable edges outside ℛ; ties break toward the
/// lowest id.
pub fn heaviest_candidates(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    irrelevant: &BTreeSet<EdgeId>,
    limit: usize,
) -> Result<Vec<EdgeId>> {
    let classification = classify_edges(g, mask, lambda, None)?;
    let mut cands: Vec<EdgeId> = classification
        .deletable
        .into_iter()
        .filter(|e| !irrelevant.contains(e))
        .collect();
    cands.sort_by(|a, b| {
        g.weight(*b)
            .total_cmp(&g.weight(*a))
            .then(a.index().cmp(&b.index()))
    });
    cands.truncate(limit);
    Ok(cands)
}

fn candidate_limit(g: &Graph, lambda: usize, k: usize) -> usize {
    if g.is_directed() {
        lambda * k * k
    } else if lambda % 2 == 0 {
        2 * lambda * k * k
    } else {
        7 * lambda * k * k * k
    }
}

struct Search<'a> {
    g: &'a Graph,
    lambda: usize,
    budget: u64,
    nodes: u64,
    best_weight: f64,
    best_set: Vec<EdgeId>,
}

impl<'a> Search<'a> {
    /// Candidates of the current (masked) graph, weight descending. For odd
    /// λ this runs the marking loop first: restrict to the heaviest pool,
    /// fold min-weight irrelevant edges into ℛ, recompute, and stop once the
    /// pool is quota-free or the restricted solve stops marking.
    fn node_candidates(&mut self, mask: &EdgeMask, k_rem: usize) -> Result<Vec<EdgeId>> {
        let limit = candidate_limit(self.g, self.lambda, k_rem);
        let odd = !self.g.is_directed() && self.lambda % 2 == 1;
        if !odd {
            return heaviest_candidates(self.g, mask, self.lambda, &BTreeSet::new(), limit);
        }
        let classification = classify_edges(self.g, mask, self.lambda, None)?;
        let mut irrelevant = IrrelevantSet::from_undeletable(classification.undeletable);
        for _ in 0..=self.g.edge_count() {
            let pool =
                heaviest_candidates(self.g, mask, self.lambda, irrelevant.as_set(), limit)?;
            if pool.len() < limit {
                return Ok(pool);
            }
            let pool_set: BTreeSet<EdgeId> = pool.iter().copied().collect();
            match solve_odd_step_masked(
                self.g,
                mask,
                self.lambda,
                k_rem,
                &irrelevant,
                Some(&pool_set),
                true,
            )? {
                OddStep::NewIrrelevant(e) => {
                    if !irrelevant.insert(e) {
                        return Err(Error::InternalInconsistency(format!(
                            "edge {} marked irrelevant twice",
                            e
                        )));
                    }
                }
                OddStep::Found(_) | OddStep::Certificate(_) => return Ok(pool),
            }
        }
        Err(Error::InternalInconsistency(
            "weighted marking loop exceeded the edge count".into(),
        ))
    }

    fn dfs(
        &mut self,
        mask: &EdgeMask,
        k_rem: usize,
        current_weight: f64,
        current: &mut Vec<EdgeId>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if current_weight > self.best_weight {
            self.best_weight = current_weight;
            self.best_set = current.clone();
        }
        if k_rem == 0 {
            return Ok(());
        }
        let cands = self.node_candidates(mask, k_rem)?;
        let weights: Vec<f64> = cands.iter().map(|&e| self.g.weight(e)).collect();
        for idx in 0..cands.len() {
            // weight-descending order: the optimistic completion from here is
            // the next k_rem weights
            let optimistic: f64 = weights[idx..(idx + k_rem).min(weights.len())]
                .iter()
                .sum();
            if current_weight + optimistic <= self.best_weight {
                break;
            }
            let e = cands[idx];
            let child = mask.plus(self.g, e)?;
            current.push(e);
            self.dfs(&child, k_rem - 1, current_weight + self.g.weight(e), current)?;
            current.pop();
        }
        Ok(())
    }
}

/// Maximum-weight set of at most k edges whose removal keeps the graph
/// λ-connected; the empty set (weight 0) when nothing better exists.
pub fn solve_weighted(g: &Graph, lambda: usize, k: usize, budget: u64) -> Result<WeightedSolution> {
    if g.weights().is_none() {
        return Err(Error::Precondition("solve_weighted needs edge weights".into()));
    }
    let empty = EdgeMask::empty(g);
    if !is_lambda_connected(g, &empty, lambda)? {
        return Err(Error::NotLambdaConnected(lambda));
    }
    let mut search = Search {
        g,
        lambda,
        budget,
        nodes: 0,
        best_weight: 0.0,
        best_set: Vec::new(),
    };
    search.dfs(&empty, k, 0.0, &mut Vec::new())?;
    let mut edges = search.best_set;
    edges.sort();
    let removal = EdgeMask::from_edges(g, &edges)?;
    if !is_lambda_connected(g, &removal, lambda)? {
        return Err(Error::InternalInconsistency(
            "weighted incumbent failed re-verification".into(),
        ));
    }
    let weight = g.total_weight(&edges);
    Ok(WeightedSolution {
        edges,
        weight,
        lambda,
        verified: true,
    })
}
