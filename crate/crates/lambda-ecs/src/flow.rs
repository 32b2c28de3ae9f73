//! Unit-capacity max-flow with BFS augmentation, edge-disjoint path
//! extraction, minimal min-cut sides, and global edge-connectivity tests.
//!
//! Undirected edges become a pair of opposite arcs that share residual
//! capacity, so a returned path never uses both orientations of one edge.
//! Multi-terminal problems go through a virtual super-source/super-sink;
//! virtual vertices never appear in returned cuts or paths.

use crate::error::{Error, Result};
use crate::graph::{BitSet, Cut, EdgeId, EdgeMask, Graph};

/// Edge-disjoint source-to-sink paths realizing a flow value.
#[derive(Clone, Debug)]
pub struct PathSystem {
    /// Each path is an ordered edge list from a source to a sink.
    pub paths: Vec<Vec<EdgeId>>,
    pub value: usize,
}

impl PathSystem {
    /// Checks pairwise edge-disjointness.
    pub fn is_edge_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths
            .iter()
            .flatten()
            .all(|e| seen.insert(e.index()))
    }
}

const NO_EDGE: usize = usize::MAX;

struct FlowNet {
    // arc arrays; arc i pairs with rev[i]
    to: Vec<usize>,
    from: Vec<usize>,
    rev: Vec<usize>,
    cap: Vec<i32>,
    res: Vec<i32>,
    edge_of: Vec<usize>,
    // per-vertex arc lists in insertion order
    adj: Vec<Vec<usize>>,
    n_total: usize,
}

impl FlowNet {
    fn build(g: &Graph, mask: &EdgeMask, sources: &[usize], sinks: &[usize]) -> FlowNet {
        let n = g.vertex_count();
        let n_total = n + 2;
        let mut net = FlowNet {
            to: Vec::new(),
            from: Vec::new(),
            rev: Vec::new(),
            cap: Vec::new(),
            res: Vec::new(),
            edge_of: Vec::new(),
            adj: vec![Vec::new(); n_total],
            n_total,
        };
        let big = g.edge_count() as i32 + 1;
        for e in g.edge_ids() {
            if mask.contains(e) {
                continue;
            }
            let (u, v) = g.endpoints(e);
            if g.is_directed() {
                net.add_pair(u, v, 1, 0, e.index());
            } else {
                net.add_pair(u, v, 1, 1, e.index());
            }
        }
        let (s, t) = (n, n + 1);
        for &u in sources {
            net.add_pair(s, u, big, 0, NO_EDGE);
        }
        for &u in sinks {
            net.add_pair(u, t, big, 0, NO_EDGE);
        }
        net
    }

    fn add_pair(&mut self, u: usize, v: usize, cap_fwd: i32, cap_bwd: i32, edge: usize) {
        let a = self.to.len();
        self.to.push(v);
        self.from.push(u);
        self.rev.push(a + 1);
        self.cap.push(cap_fwd);
        self.res.push(cap_fwd);
        self.edge_of.push(edge);
        self.adj[u].push(a);
        self.to.push(u);
        self.from.push(v);
        self.rev.push(a);
        self.cap.push(cap_bwd);
        self.res.push(cap_bwd);
        self.edge_of.push(edge);
        self.adj[v].push(a + 1);
    }

    /// One BFS augmentation from s to t; returns whether a unit was pushed.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut parent_arc = vec![NO_EDGE; self.n_total];
        let mut visited = vec![false; self.n_total];
        let mut queue = std::collections::VecDeque::new();
        visited[s] = true;
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                if self.res[a] > 0 && !visited[self.to[a]] {
                    visited[self.to[a]] = true;
                    parent_arc[self.to[a]] = a;
                    if self.to[a] == t {
                        break 'bfs;
                    }
                    queue.push_back(self.to[a]);
                }
            }
        }
        if !visited[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = parent_arc[v];
            self.res[a] -= 1;
            self.res[self.rev[a]] += 1;
            v = self.from[a];
        }
        true
    }

    fn run(&mut self, cap_limit: Option<usize>) -> usize {
        let s = self.n_total - 2;
        let t = self.n_total - 1;
        let mut value = 0;
        while cap_limit.map_or(true, |c| value < c) && self.augment(s, t) {
            value += 1;
        }
        value
    }

    /// Units pushed through each arc, net of cancellation with its pair.
    fn net_flow(&self) -> Vec<i32> {
        (0..self.to.len())
            .map(|a| (self.cap[a] - self.res[a]).max(0))
            .collect()
    }

    /// Strips `value` edge-disjoint paths out of the flow, preferring the
    /// lowest EdgeId at every step; loops in the walk are flow cycles and
    /// get discarded.
    fn strip_paths(&self, value: usize) -> Vec<Vec<(EdgeId, usize, usize)>> {
        let s = self.n_total - 2;
        let t = self.n_total - 1;
        let mut net = self.net_flow();
        let mut out = Vec::with_capacity(value);
        for _ in 0..value {
            let mut walk: Vec<(usize, usize)> = Vec::new(); // (vertex, arc taken)
            let mut pos_of: Vec<Option<usize>> = vec![None; self.n_total];
            let mut cur = s;
            pos_of[cur] = Some(0);
            while cur != t {
                let mut best: Option<usize> = None;
                for &a in &self.adj[cur] {
                    if net[a] > 0 {
                        let better = match best {
                            None => true,
                            Some(b) => self.edge_of[a] < self.edge_of[b],
                        };
                        if better {
                            best = Some(a);
                        }
                    }
                }
                let a = best.expect("flow conservation: stranded walk");
                net[a] -= 1;
                let nxt = self.to[a];
                if let Some(p) = pos_of[nxt] {
                    // revisit: drop the loop segment (a flow cycle)
                    for &(v, _) in &walk[p..] {
                        if v != nxt {
                            pos_of[v] = None;
                        }
                    }
                    walk.truncate(p);
                } else {
                    walk.push((cur, a));
                    pos_of[nxt] = Some(walk.len());
                }
                cur = nxt;
            }
            let path: Vec<(EdgeId, usize, usize)> = walk
                .iter()
                .filter(|&&(_, a)| self.edge_of[a] != NO_EDGE)
                .map(|&(_, a)| (EdgeId(self.edge_of[a]), self.from[a], self.to[a]))
                .collect();
            out.push(path);
        }
        out
    }

    /// Vertices reachable from the super-source in the residual network.
    fn residual_side(&self) -> Vec<bool> {
        let s = self.n_total - 2;
        let mut visited = vec![false; self.n_total];
        let mut queue = std::collections::VecDeque::new();
        visited[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                if self.res[a] > 0 && !visited[self.to[a]] {
                    visited[self.to[a]] = true;
                    queue.push_back(self.to[a]);
                }
            }
        }
        visited
    }

    /// Vertices that can still reach the super-sink in the residual network.
    fn residual_reaches_sink(&self) -> Vec<bool> {
        let t = self.n_total - 1;
        let mut visited = vec![false; self.n_total];
        let mut queue = std::collections::VecDeque::new();
        visited[t] = true;
        queue.push_back(t);
        while let Some(v) = queue.pop_front() {
            // step backwards along arcs with remaining residual
            for &a in &self.adj[v] {
                // arc rev[a] runs to[a]=v <- from； residual on the forward twin
                let back = self.rev[a];
                if self.res[back] > 0 && !visited[self.to[a]] {
                    visited[self.to[a]] = true;
                    queue.push_back(self.to[a]);
                }
            }
        }
        visited
    }
}

fn check_terminals(g: &Graph, sources: &[usize], sinks: &[usize]) -> Result<()> {
    if sources.is_empty() || sinks.is_empty() {
        return Err(Error::Precondition("empty source or sink set".into()));
    }
    for &v in sources.iter().chain(sinks) {
        if v >= g.vertex_count() {
            return Err(Error::Precondition(format!("vertex {} out of range", v)));
        }
    }
    if sources.iter().any(|s| sinks.contains(s)) {
        return Err(Error::OverlappingTerminals);
    }
    Ok(())
}

/// Maximum number of edge-disjoint source-to-sink paths, optionally capped,
/// together with a path system realizing it.
pub fn max_flow(
    g: &Graph,
    mask: &EdgeMask,
    sources: &[usize],
    sinks: &[usize],
    cap_limit: Option<usize>,
) -> Result<(usize, PathSystem)> {
    check_terminals(g, sources, sinks)?;
    let mut net = FlowNet::build(g, mask, sources, sinks);
    let value = net.run(cap_limit);
    let paths = net
        .strip_paths(value)
        .into_iter()
        .map(|p| p.into_iter().map(|(e, _, _)| e).collect())
        .collect();
    Ok((value, PathSystem { paths, value }))
}

/// Like [`max_flow`] but keeps the traversal orientation of every path edge,
/// which matters for undirected graphs.
pub fn max_flow_oriented(
    g: &Graph,
    mask: &EdgeMask,
    sources: &[usize],
    sinks: &[usize],
    cap_limit: Option<usize>,
) -> Result<(usize, Vec<Vec<(EdgeId, usize, usize)>>)> {
    check_terminals(g, sources, sinks)?;
    let mut net = FlowNet::build(g, mask, sources, sinks);
    let value = net.run(cap_limit);
    Ok((value, net.strip_paths(value)))
}

/// Just the flow value.
pub fn flow_value(
    g: &Graph,
    mask: &EdgeMask,
    sources: &[usize],
    sinks: &[usize],
    cap_limit: Option<usize>,
) -> Result<usize> {
    check_terminals(g, sources, sinks)?;
    let mut net = FlowNet::build(g, mask, sources, sinks);
    Ok(net.run(cap_limit))
}

/// A min-cut side X with sources ⊆ X and sinks ∩ X = ∅.
///
/// With `minimal` the unique inclusion-minimal such side is returned (the
/// residual-reachable set); otherwise the inclusion-maximal one.
pub fn min_cut_side(
    g: &Graph,
    mask: &EdgeMask,
    sources: &[usize],
    sinks: &[usize],
    minimal: bool,
) -> Result<Cut> {
    check_terminals(g, sources, sinks)?;
    let mut net = FlowNet::build(g, mask, sources, sinks);
    net.run(None);
    let n = g.vertex_count();
    let side = if minimal {
        let visited = net.residual_side();
        BitSet::from_iter(n, (0..n).filter(|&v| visited[v]))
    } else {
        let reaches = net.residual_reaches_sink();
        BitSet::from_iter(n, (0..n).filter(|&v| !reaches[v]))
    };
    Cut::new(g, side)
}

/// Global edge connectivity of the unmasked graph.
pub fn edge_connectivity(g: &Graph, mask: &EdgeMask) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition(
            "edge connectivity needs at least two vertices".into(),
        ));
    }
    let mut best = usize::MAX;
    for t in 1..n {
        let cap = if best == usize::MAX { None } else { Some(best) };
        let v = flow_value(g, mask, &[0], &[t], cap)?;
        best = best.min(v);
        if g.is_directed() {
            let cap = Some(best);
            let v = flow_value(g, mask, &[t], &[0], cap)?;
            best = best.min(v);
        }
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Whether every cut of the unmasked graph is crossed by at least `lambda`
/// edges. Uses capped flows for early exit.
pub fn is_lambda_connected(g: &Graph, mask: &EdgeMask, lambda: usize) -> Result<bool> {
    if lambda == 0 {
        return Err(Error::Precondition("lambda must be at least 1".into()));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition(
            "connectivity test needs at least two vertices".into(),
        ));
    }
    for t in 1..n {
        if flow_value(g, mask, &[0], &[t], Some(lambda))? < lambda {
            return Ok(false);
        }
        if g.is_directed() && flow_value(g, mask, &[t], &[0], Some(lambda))? < lambda {
            return Ok(false);
        }
    }
    Ok(true)
}
