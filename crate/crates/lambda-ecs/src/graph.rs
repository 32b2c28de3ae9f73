//! Multigraph representation with stable edge identities, edge-removal masks,
//! and cut-size evaluation.
//!
//! Vertices are `0..n`. Edges are stored in insertion order and keep their
//! [`EdgeId`] forever: masking an edge hides it from every operation without
//! renumbering the rest. Parallel edges are distinct and count with
//! multiplicity in all cut sizes; self-loops are rejected on construction.

use crate::error::{Error, Result};

/// Stable identity of an edge: its position in the graph's edge list.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fixed-capacity bitset used for vertex sides and edge masks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; (len + 63) / 64],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
            len: self.len,
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn minus(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
            len: self.len,
        }
    }

    pub fn complement(&self) -> BitSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        BitSet {
            words,
            len: self.len,
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &BitSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(len: usize, items: I) -> Self {
        let mut s = BitSet::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }
}

/// A vertex-indexed multigraph, directed or undirected, with optional
/// non-negative edge weights aligned with the edge list.
#[derive(Clone, PartialEq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    directed: bool,
    weights: Option<Vec<f64>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        Self::with_weights(n, edges, directed, None)
    }

    pub fn with_weights(
        n: usize,
        edges: Vec<(usize, usize)>,
        directed: bool,
        weights: Option<Vec<f64>>,
    ) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {} endpoints ({}, {}) out of range for n = {}",
                    i, u, v, n
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "edge {} is a self-loop at vertex {}",
                    i, u
                )));
            }
        }
        if let Some(w) = &weights {
            if w.len() != edges.len() {
                return Err(Error::InvalidGraph(format!(
                    "{} weights for {} edges",
                    w.len(),
                    edges.len()
                )));
            }
            if let Some(bad) = w.iter().find(|x| !x.is_finite() || **x < 0.0) {
                return Err(Error::InvalidGraph(format!("invalid edge weight {}", bad)));
            }
        }
        Ok(Graph {
            n,
            edges,
            directed,
            weights,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Endpoints of an edge as stored: `(tail, head)` for digraphs.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.weights.as_ref().map_or(0.0, |w| w[e.0])
    }

    pub fn set_weights(&mut self, weights: Vec<f64>) -> Result<()> {
        if weights.len() != self.edges.len() {
            return Err(Error::InvalidGraph(format!(
                "{} weights for {} edges",
                weights.len(),
                self.edges.len()
            )));
        }
        if let Some(bad) = weights.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidGraph(format!("invalid edge weight {}", bad)));
        }
        self.weights = Some(weights);
        Ok(())
    }

    pub fn total_weight<'a, I: IntoIterator<Item = &'a EdgeId>>(&self, edges: I) -> f64 {
        edges.into_iter().map(|&e| self.weight(e)).sum()
    }
}

/// A set of edges treated as absent from the base graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeMask {
    removed: BitSet,
}

impl EdgeMask {
    pub fn empty(g: &Graph) -> Self {
        EdgeMask {
            removed: BitSet::new(g.edge_count()),
        }
    }

    pub fn from_edges<'a, I: IntoIterator<Item = &'a EdgeId>>(g: &Graph, edges: I) -> Result<Self> {
        let mut m = Self::empty(g);
        for &e in edges {
            m.insert(g, e)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, g: &Graph, e: EdgeId) -> Result<()> {
        if e.0 >= g.edge_count() {
            return Err(Error::InvalidEdge(e.0, g.edge_count()));
        }
        self.removed.insert(e.0);
        Ok(())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.removed.contains(e.0)
    }

    pub fn plus(&self, g: &Graph, e: EdgeId) -> Result<Self> {
        let mut m = self.clone();
        m.insert(g, e)?;
        Ok(m)
    }

    pub fn union(&self, other: &EdgeMask) -> Self {
        EdgeMask {
            removed: self.removed.union(&other.removed),
        }
    }

    pub fn removed_count(&self) -> usize {
        self.removed.count()
    }

    pub fn iter_removed(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.removed.iter().map(EdgeId)
    }
}

/// One side of a cut: a non-empty proper subset of the vertex set.
///
/// Directed semantics count edges leaving the side; undirected semantics
/// count edges with exactly one endpoint inside.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cut {
    side: BitSet,
}

impl Cut {
    pub fn new(g: &Graph, side: BitSet) -> Result<Self> {
        if side.len() != g.vertex_count() {
            return Err(Error::InvalidCut(format!(
                "side over {} vertices in a graph with {}",
                side.len(),
                g.vertex_count()
            )));
        }
        let c = side.count();
        if c == 0 || c == g.vertex_count() {
            return Err(Error::InvalidCut(
                "side must be a non-empty proper subset".into(),
            ));
        }
        Ok(Cut { side })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(g: &Graph, vs: I) -> Result<Self> {
        Self::new(g, BitSet::from_iter(g.vertex_count(), vs))
    }

    pub fn side(&self) -> &BitSet {
        &self.side
    }

    pub fn contains(&self, v: usize) -> bool {
        self.side.contains(v)
    }

    pub fn size(&self) -> usize {
        self.side.count()
    }

    /// Flip to the side containing `anchor` (undirected convention, e.g. u*).
    pub fn oriented_with(&self, g: &Graph, anchor: usize) -> Result<Cut> {
        if self.side.contains(anchor) {
            Ok(self.clone())
        } else {
            Cut::new(g, self.side.complement())
        }
    }

    pub fn is_strict_subset(&self, other: &Cut) -> bool {
        self.side.is_strict_subset(&other.side)
    }

    /// Whether the edge has exactly one endpoint inside (undirected), or its
    /// tail inside and head outside (directed).
    pub fn crossed_by(&self, g: &Graph, e: EdgeId) -> bool {
        let (u, v) = g.endpoints(e);
        if g.is_directed() {
            self.side.contains(u) && !self.side.contains(v)
        } else {
            self.side.contains(u) != self.side.contains(v)
        }
    }

    /// Whether the cut puts `u` and `v` on different sides (unordered for
    /// undirected graphs, `u` inside / `v` outside for digraphs).
    pub fn separates(&self, directed: bool, u: usize, v: usize) -> bool {
        if directed {
            self.side.contains(u) && !self.side.contains(v)
        } else {
            self.side.contains(u) != self.side.contains(v)
        }
    }
}

/// Number of unmasked edges crossing the cut.
pub fn cut_size(g: &Graph, mask: &EdgeMask, x: &Cut) -> usize {
    g.edge_ids()
        .filter(|&e| !mask.contains(e) && x.crossed_by(g, e))
        .count()
}

/// The exact edge set counted by [`cut_size`], ascending by id.
pub fn crossing_edges(g: &Graph, mask: &EdgeMask, x: &Cut) -> Vec<EdgeId> {
    g.edge_ids()
        .filter(|&e| !mask.contains(e) && x.crossed_by(g, e))
        .collect()
}

/// Number of unmasked edges between two disjoint vertex sets (undirected
/// count; used by the cycle-partition checks).
pub fn edges_between(g: &Graph, mask: &EdgeMask, a: &BitSet, b: &BitSet) -> usize {
    debug_assert!(a.is_disjoint(b));
    g.edge_ids()
        .filter(|&e| {
            if mask.contains(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u))
        })
        .count()
}

/// Cut size of a raw vertex side, with the convention that the empty and the
/// full side have size zero.
pub fn raw_side_size(g: &Graph, mask: &EdgeMask, side: &BitSet) -> usize {
    g.edge_ids()
        .filter(|&e| {
            if mask.contains(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if g.is_directed() {
                side.contains(u) && !side.contains(v)
            } else {
                side.contains(u) != side.contains(v)
            }
        })
        .count()
}

/// Checks the submodular inequality for the pair of cuts:
/// size(X ∩ Y) + size(X ∪ Y) ≤ size(X) + size(Y).
///
/// Intersection and union are evaluated with the empty/full convention, so
/// disjoint and covering pairs are fine. Used as a test assertion; always
/// true on correct inputs.
pub fn submodularity_check(g: &Graph, mask: &EdgeMask, x: &Cut, y: &Cut) -> bool {
    let inter = x.side().intersection(y.side());
    let uni = x.side().union(y.side());
    raw_side_size(g, mask, &inter) + raw_side_size(g, mask, &uni)
        <= cut_size(g, mask, x) + cut_size(g, mask, y)
}

/// All valid cut sides of the graph, for exhaustive small-n enumeration.
/// Undirected graphs enumerate each unordered partition once (vertex 0 kept
/// inside); digraphs enumerate both orientations.
pub fn enumerate_cuts(g: &Graph) -> Vec<Cut> {
    let n = g.vertex_count();
    assert!(n <= 20, "exhaustive cut enumeration is for small graphs");
    let mut out = Vec::new();
    for bits in 1..(1u32 << n) - 1 {
        if !g.is_directed() && bits & 1 == 0 {
            continue;
        }
        let side = BitSet::from_iter(n, (0..n).filter(|&i| bits >> i & 1 == 1));
        out.push(Cut { side });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)], false).unwrap()
    }

    #[test]
    fn rejects_self_loops() {
        assert!(Graph::new(3, vec![(0, 1), (1, 1)], true).is_err());
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(Graph::with_weights(2, vec![(0, 1)], false, Some(vec![-1.0])).is_err());
        assert!(Graph::with_weights(2, vec![(0, 1)], false, Some(vec![1.0, 2.0])).is_err());
    }

    #[test]
    fn cut_size_directed_two_cycle() {
        let g = Graph::new(2, vec![(0, 1), (1, 0)], true).unwrap();
        let x = Cut::from_vertices(&g, [0]).unwrap();
        assert_eq!(cut_size(&g, &EdgeMask::empty(&g), &x), 1);
        assert_eq!(crossing_edges(&g, &EdgeMask::empty(&g), &x), vec![EdgeId(0)]);
    }

    #[test]
    fn cut_size_c4_adjacent_pair() {
        let g = c4();
        let x = Cut::from_vertices(&g, [0, 1]).unwrap();
        let mask = EdgeMask::empty(&g);
        assert_eq!(cut_size(&g, &mask, &x), 2);
        let masked = mask.plus(&g, EdgeId(3)).unwrap();
        assert_eq!(cut_size(&g, &masked, &x), 1);
    }

    #[test]
    fn crossing_under_full_mask_is_empty() {
        let g = c4();
        let mask = EdgeMask::from_edges(&g, &g.edge_ids().collect::<Vec<_>>()).unwrap();
        let x = Cut::from_vertices(&g, [0]).unwrap();
        assert!(crossing_edges(&g, &mask, &x).is_empty());
    }

    #[test]
    fn triangle_crossing_edges_at_vertex() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)], false).unwrap();
        let x = Cut::from_vertices(&g, [0]).unwrap();
        assert_eq!(
            crossing_edges(&g, &EdgeMask::empty(&g), &x),
            vec![EdgeId(0), EdgeId(2)]
        );
    }

    #[test]
    fn degenerate_cut_rejected() {
        let g = c4();
        assert!(Cut::from_vertices(&g, []).is_err());
        assert!(Cut::from_vertices(&g, [0, 1, 2, 3]).is_err());
    }

    #[test]
    fn submodularity_nested_is_equality() {
        let g = c4();
        let mask = EdgeMask::empty(&g);
        let x = Cut::from_vertices(&g, [0]).unwrap();
        let y = Cut::from_vertices(&g, [0, 1]).unwrap();
        assert!(submodularity_check(&g, &mask, &x, &y));
        let inter = x.side().intersection(y.side());
        let uni = x.side().union(y.side());
        assert_eq!(
            raw_side_size(&g, &mask, &inter) + raw_side_size(&g, &mask, &uni),
            cut_size(&g, &mask, &x) + cut_size(&g, &mask, &y)
        );
    }

    #[test]
    fn submodularity_disjoint_pair_holds() {
        let g = c4();
        let mask = EdgeMask::empty(&g);
        let x = Cut::from_vertices(&g, [0]).unwrap();
        let y = Cut::from_vertices(&g, [2]).unwrap();
        assert!(submodularity_check(&g, &mask, &x, &y));
    }

    #[test]
    fn mask_additivity() {
        let g = c4();
        let x = Cut::from_vertices(&g, [1, 2]).unwrap();
        let mask = EdgeMask::from_edges(&g, &[EdgeId(0), EdgeId(2)]).unwrap();
        let masked_crossing = mask.iter_removed().filter(|&e| x.crossed_by(&g, e)).count();
        assert_eq!(
            cut_size(&g, &EdgeMask::empty(&g), &x),
            cut_size(&g, &mask, &x) + masked_crossing
        );
    }

    #[test]
    fn edge_identity_stable_under_mask() {
        let g = c4();
        let x = Cut::from_vertices(&g, [0, 1]).unwrap();
        let mask = EdgeMask::from_edges(&g, &[EdgeId(1)]).unwrap();
        let all = crossing_edges(&g, &EdgeMask::empty(&g), &x);
        let masked = crossing_edges(&g, &mask, &x);
        for e in all {
            assert_eq!(masked.contains(&e), !mask.contains(e));
        }
    }
}
