//! Deletable/undeletable edge classification and the newly-undeletable set
//! D(e*) = del(G) ∩ undel(G − e*).
//!
//! An edge is deletable when its removal keeps the graph λ-connected. The
//! per-edge check only runs a flow between the edge's endpoints: a cut that
//! drops below λ after removing (u, v) must separate u from v in the crossing
//! direction, so endpoint connectivity is equivalent to the definition.

use crate::error::{Error, Result};
use crate::flow::{flow_value, is_lambda_connected};
use crate::graph::{EdgeId, EdgeMask, Graph};
use std::collections::BTreeSet;

/// Partition of the (possibly restricted) edges into deletable and
/// undeletable.
#[derive(Clone, Debug)]
pub struct Classification {
    pub deletable: BTreeSet<EdgeId>,
    pub undeletable: BTreeSet<EdgeId>,
    pub restricted_to: Option<BTreeSet<EdgeId>>,
}

impl Classification {
    pub fn is_deletable(&self, e: EdgeId) -> bool {
        self.deletable.contains(&e)
    }
}

/// Whether a single unmasked edge is deletable in (g, mask).
pub fn edge_is_deletable(g: &Graph, mask: &EdgeMask, lambda: usize, e: EdgeId) -> Result<bool> {
    let (u, v) = g.endpoints(e);
    let with_e = mask.plus(g, e)?;
    Ok(flow_value(g, &with_e, &[u], &[v], Some(lambda))? >= lambda)
}

/// Classifies every unmasked edge (or every edge of `restrict`) of a
/// λ-connected graph.
pub fn classify_edges(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    restrict: Option<&BTreeSet<EdgeId>>,
) -> Result<Classification> {
    if !is_lambda_connected(g, mask, lambda)? {
        return Err(Error::NotLambdaConnected(lambda));
    }
    let mut deletable = BTreeSet::new();
    let mut undeletable = BTreeSet::new();
    for e in g.edge_ids() {
        if mask.contains(e) {
            continue;
        }
        if let Some(r) = restrict {
            if !r.contains(&e) {
                continue;
            }
        }
        if edge_is_deletable(g, mask, lambda, e)? {
            deletable.insert(e);
        } else {
            undeletable.insert(e);
        }
    }
    Ok(Classification {
        deletable,
        undeletable,
        restricted_to: restrict.cloned(),
    })
}

/// D(e*): edges deletable in (g, mask) that turn undeletable once e* is also
/// removed, intersected with `restrict` when given.
pub fn newly_undeletable(
    g: &Graph,
    mask: &EdgeMask,
    lambda: usize,
    e_star: EdgeId,
    restrict: Option<&BTreeSet<EdgeId>>,
) -> Result<BTreeSet<EdgeId>> {
    let before = classify_edges(g, mask, lambda, restrict)?;
    if !before.is_deletable(e_star) {
        return Err(Error::Precondition(format!(
            "edge {} is not deletable",
            e_star
        )));
    }
    let star_mask = mask.plus(g, e_star)?;
    let mut out = BTreeSet::new();
    for &e in &before.deletable {
        if e == e_star {
            continue;
        }
        if !edge_is_deletable(g, &star_mask, lambda, e)? {
            out.insert(e);
        }
    }
    Ok(out)
}
