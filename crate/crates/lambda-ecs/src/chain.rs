//! Witness-edge selection and nested λ-cut chains.
//!
//! Around a removed deletable edge e* = (u*, v*), the newly-undeletable set
//! D(e*) concentrates on one of the λ edge-disjoint u*→v* paths of
//! G* = G − e*. Picking witness edges along that path gives a set Z with at
//! most one member on any λ-cut of G* separating u* from v*; uncrossing the
//! per-witness min-cuts yields a strictly nested chain C₁ ⊂ … ⊂ C_ℓ with
//! exactly one witness per cut, which is what the odd-λ machinery consumes.

use crate::classify::newly_undeletable;
use crate::error::{Error, Result};
use crate::flow::{max_flow_oriented, min_cut_side};
use crate::graph::{crossing_edges, cut_size, Cut, EdgeId, EdgeMask, Graph};
use std::collections::BTreeSet;

/// Ordered witness edges from D(e*), in path order from u* toward v*.
#[derive(Clone, Debug)]
pub struct WitnessSet {
    pub e_star: EdgeId,
    pub u_star: usize,
    pub v_star: usize,
    /// Witness edges, ordered along the chosen path.
    pub edges: Vec<EdgeId>,
    /// Traversal orientation of each witness: (nearer u*, nearer v*).
    pub oriented: Vec<(usize, usize)>,
}

/// Nested λ-cuts of G*, each containing u* and excluding v*, aligned with
/// their unique crossing witness.
#[derive(Clone, Debug)]
pub struct CutChain {
    pub e_star: EdgeId,
    pub u_star: usize,
    pub v_star: usize,
    pub cuts: Vec<Cut>,
    pub witnesses: Vec<EdgeId>,
    pub oriented: Vec<(usize, usize)>,
    pub lambda: usize,
}

impl CutChain {
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }
}

/// Selects the first `ell` D(e*) edges along the u*→v* path that carries the
/// most of D(e*). Requires |D(e*)| ≥ ell·λ.
pub fn witness_edges(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    e_star: EdgeId,
    ell: usize,
    restrict: Option<&BTreeSet<EdgeId>>,
) -> Result<WitnessSet> {
    let d_set = newly_undeletable(g, mask, lambda, e_star, restrict)?;
    if d_set.len() < ell * lambda {
        return Err(Error::InsufficientWitnesses {
            have: d_set.len(),
            need: ell * lambda,
        });
    }
    let (u_star, v_star) = g.endpoints(e_star);
    let star_mask = mask.plus(g, e_star)?;
    let (value, paths) =
        max_flow_oriented(g, &star_mask, &[u_star], &[v_star], Some(lambda))?;
    if value < lambda {
        return Err(Error::InternalInconsistency(format!(
            "G - e* carries only {} of {} required disjoint paths",
            value, lambda
        )));
    }
    let mut best: Option<(usize, usize)> = None; // (count, path index)
    for (i, p) in paths.iter().enumerate() {
        let count = p.iter().filter(|(e, _, _)| d_set.contains(e)).count();
        if best.map_or(true, |(c, _)| count > c) {
            best = Some((count, i));
        }
    }
    let (count, idx) = best.expect("lambda >= 1 paths");
    if count < ell {
        return Err(Error::InternalInconsistency(format!(
            "best path carries {} D(e*) edges, expected at least {}",
            count, ell
        )));
    }
    let mut edges = Vec::with_capacity(ell);
    let mut oriented = Vec::with_capacity(ell);
    for &(e, from, to) in &paths[idx] {
        if d_set.contains(&e) {
            edges.push(e);
            oriented.push((from, to));
            if edges.len() == ell {
                break;
            }
        }
    }
    Ok(WitnessSet {
        e_star,
        u_star,
        v_star,
        edges,
        oriented,
    })
}

/// Uncrosses two λ-cuts that both separate (u*, v*): nested pairs come back
/// as (outer, inner); crossing pairs come back as (union, intersection).
/// Each input witness crosses exactly one returned cut.
pub fn uncross_pair(
    g: &Graph,
    star_mask: &EdgeMask,
    lambda: usize,
    directed: bool,
    u_star: usize,
    v_star: usize,
    c_i: &Cut,
    c_j: &Cut,
    e_i: EdgeId,
    e_j: EdgeId,
) -> Result<(Cut, Cut)> {
    for (c, e) in [(c_i, e_i), (c_j, e_j)] {
        if cut_size(g, star_mask, c) != lambda {
            return Err(Error::Precondition(format!(
                "input side is not a {}-cut",
                lambda
            )));
        }
        if !c.separates(directed, u_star, v_star) {
            return Err(Error::Precondition(
                "input cut does not separate (u*, v*)".into(),
            ));
        }
        if !c.crossed_by(g, e) {
            return Err(Error::Precondition(format!(
                "witness {} does not cross its cut",
                e
            )));
        }
    }
    if c_j.side() == c_i.side() {
        return Err(Error::Precondition("cuts must be distinct".into()));
    }
    if c_j.side().is_strict_subset(c_i.side()) {
        return Ok((c_i.clone(), c_j.clone()));
    }
    if c_i.side().is_strict_subset(c_j.side()) {
        return Ok((c_j.clone(), c_i.clone()));
    }
    let union = Cut::new(g, c_i.side().union(c_j.side()))?;
    let inter = Cut::new(g, c_i.side().intersection(c_j.side()))?;
    for c in [&union, &inter] {
        if cut_size(g, star_mask, c) != lambda || !c.separates(directed, u_star, v_star) {
            return Err(Error::InternalInconsistency(
                "uncrossing produced a non-minimum cut".into(),
            ));
        }
    }
    let i_crosses_union = union.crossed_by(g, e_i);
    let i_crosses_inter = inter.crossed_by(g, e_i);
    let j_crosses_union = union.crossed_by(g, e_j);
    let j_crosses_inter = inter.crossed_by(g, e_j);
    if !(i_crosses_union ^ i_crosses_inter) || !(j_crosses_union ^ j_crosses_inter) {
        return Err(Error::InternalInconsistency(
            "witness must cross exactly one uncrossed cut".into(),
        ));
    }
    Ok((union, inter))
}

/// Builds the nested chain for a witness set: seed each witness with the
/// minimal min-cut between {u*, uᵢ} and {v*, vᵢ} in G*, then sweep
/// uncross_pair until fully nested.
pub fn build_chain(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    witness: &WitnessSet,
) -> Result<CutChain> {
    let star_mask = mask.plus(g, witness.e_star)?;
    let directed = g.is_directed();
    let (u_star, v_star) = (witness.u_star, witness.v_star);
    let ell = witness.edges.len();

    let mut cuts = Vec::with_capacity(ell);
    for idx in 0..ell {
        let (u_i, v_i) = witness.oriented[idx];
        let mut sources = vec![u_star];
        if u_i != u_star {
            sources.push(u_i);
        }
        let mut sinks = vec![v_star];
        if v_i != v_star {
            sinks.push(v_i);
        }
        let seed = min_cut_side(g, &star_mask, &sources, &sinks, true)?;
        if cut_size(g, &star_mask, &seed) != lambda {
            return Err(Error::InternalInconsistency(format!(
                "seed cut for witness {} has size {} != lambda {}; witness outside D(e*)?",
                witness.edges[idx],
                cut_size(g, &star_mask, &seed),
                lambda
            )));
        }
        cuts.push(seed);
    }

    // sweep: settle index j against all larger indices before advancing
    let mut guard = ell * ell * (g.vertex_count() + 1) + 16;
    for j in 0..ell {
        loop {
            let mut changed = false;
            for q in j + 1..ell {
                if cuts[j].side().is_strict_subset(cuts[q].side()) {
                    continue;
                }
                let (big, small) = uncross_pair(
                    g,
                    &star_mask,
                    lambda,
                    directed,
                    u_star,
                    v_star,
                    &cuts[q],
                    &cuts[j],
                    witness.edges[q],
                    witness.edges[j],
                )?;
                if !small.crossed_by(g, witness.edges[j]) || !big.crossed_by(g, witness.edges[q]) {
                    return Err(Error::InternalInconsistency(
                        "uncrossing reassigned witnesses out of path order".into(),
                    ));
                }
                cuts[j] = small;
                cuts[q] = big;
                changed = true;
                guard = guard.checked_sub(1).ok_or_else(|| {
                    Error::InternalInconsistency("uncrossing sweep did not terminate".into())
                })?;
            }
            if !changed {
                break;
            }
        }
    }

    let chain = CutChain {
        e_star: witness.e_star,
        u_star,
        v_star,
        cuts,
        witnesses: witness.edges.clone(),
        oriented: witness.oriented.clone(),
        lambda,
    };
    validate_chain(g, &star_mask, &chain)?;
    Ok(chain)
}

/// Re-checks every chain invariant; errors are internal inconsistencies.
pub fn validate_chain(g: &Graph, star_mask: &EdgeMask, chain: &CutChain) -> Result<()> {
    let directed = g.is_directed();
    let ell = chain.cuts.len();
    let witness_set: BTreeSet<EdgeId> = chain.witnesses.iter().copied().collect();
    for i in 0..ell {
        let c = &chain.cuts[i];
        if cut_size(g, star_mask, c) != chain.lambda {
            return Err(Error::InternalInconsistency(format!(
                "chain cut {} is not a {}-cut",
                i, chain.lambda
            )));
        }
        if !c.separates(directed, chain.u_star, chain.v_star) {
            return Err(Error::InternalInconsistency(format!(
                "chain cut {} does not separate (u*, v*)",
                i
            )));
        }
        let crossing: Vec<EdgeId> = crossing_edges(g, star_mask, c)
            .into_iter()
            .filter(|e| witness_set.contains(e))
            .collect();
        if crossing != vec![chain.witnesses[i]] {
            return Err(Error::InternalInconsistency(format!(
                "chain cut {} crossed by witnesses {:?}, expected exactly its own",
                i, crossing
            )));
        }
        if i + 1 < ell && !chain.cuts[i].side().is_strict_subset(chain.cuts[i + 1].side()) {
            return Err(Error::InternalInconsistency(format!(
                "chain cuts {} and {} are not strictly nested",
                i,
                i + 1
            )));
        }
        for j in 0..i {
            let (u_j, v_j) = chain.oriented[j];
            if !c.contains(u_j) || !c.contains(v_j) {
                return Err(Error::InternalInconsistency(format!(
                    "witness {} endpoints not inside chain cut {}",
                    j, i
                )));
            }
        }
    }
    Ok(())
}
