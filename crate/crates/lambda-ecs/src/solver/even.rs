//! Even-λ undirected search: same skeleton as the directed case with a 2kλ
//! big-D threshold; extraction takes the odd-indexed half of a 2k-witness
//! path selection, and the certificate bound doubles to 2λk².

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{solve_greedy_then_extract, ExtractRule, SolveOutcome};

/// Finds k deletable edges of a λ-connected undirected graph with λ even,
/// or certifies that at most 2λk² edges are deletable.
pub fn solve_even(g: &Graph, lambda: usize, k: usize) -> Result<SolveOutcome> {
    if g.is_directed() {
        return Err(Error::Precondition(
            "solve_even needs an undirected graph".into(),
        ));
    }
    if lambda % 2 != 0 {
        return Err(Error::Precondition(
            "solve_even handles even lambda only; dispatch odd lambda to solve_odd".into(),
        ));
    }
    solve_greedy_then_extract(
        g,
        lambda,
        k,
        ExtractRule::OddIndexedHalf,
        |d| d > 2 * k * lambda,
        2 * lambda * k * k,
    )
}
