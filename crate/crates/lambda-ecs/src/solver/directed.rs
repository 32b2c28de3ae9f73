//! Directed deletion-set search: greedy maximal set, then witness extraction
//! from any step whose newly-undeletable set reaches k·λ, else a λk² bound
//! certificate.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeMask, Graph};
use crate::solver::{
    extract_via_witnesses, solve_greedy_then_extract, DeletionSet, ExtractRule, SolveOutcome,
};
use std::collections::BTreeSet;

/// Extracts a verified k-set from D(e*) when |D(e*)| ≥ k·λ.
pub fn extract_from_big_d(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    k: usize,
    e_star: EdgeId,
    d_set: &BTreeSet<EdgeId>,
) -> Result<DeletionSet> {
    if d_set.len() < k * lambda {
        return Err(Error::Precondition(format!(
            "|D(e*)| = {} below threshold {}",
            d_set.len(),
            k * lambda
        )));
    }
    extract_via_witnesses(g, mask, lambda, k, e_star, ExtractRule::AllOfK, None)
}

/// Finds k deletable arcs of a λ-connected digraph or certifies that at most
/// λk² arcs are deletable at all.
pub fn solve_directed(g: &Graph, lambda: usize, k: usize) -> Result<SolveOutcome> {
    if !g.is_directed() {
        return Err(Error::Precondition(
            "solve_directed needs a digraph".into(),
        ));
    }
    solve_greedy_then_extract(
        g,
        lambda,
        k,
        ExtractRule::AllOfK,
        |d| d >= k * lambda,
        lambda * k * k,
    )
}
