//! Simple undirected graphs with masked vertex deletion.
//!
//! Vertices are `0..n`. Deleting vertices never renumbers the graph: every
//! traversal takes a [`VertexMask`] naming the vertices that are still
//! present, so witnesses found deep inside nested deletions refer to the
//! original vertex ids.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("vertex {0} repeated in sequence")]
    RepeatedVertex(Vertex),
}

/// Immutable simple graph.
///
/// Adjacency is kept twice: a bit matrix for constant-time `has_edge` and
/// sorted neighbour lists for traversal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
    nbrs: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![FixedBitSet::with_capacity(n); n])
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if rows[u].contains(v) {
                return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges. Loops
    /// and out-of-range vertices are still errors.
    pub fn from_edge_set<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let nbrs = rows.iter().map(|r| r.ones().collect()).collect();
        Graph { rows, nbrs }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    /// Sorted neighbour list.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    /// Open neighbourhood as a bit set.
    #[inline]
    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].clone();
                r.toggle_range(..);
                r.set(v, false);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n());
        Self::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling must be a permutation")
    }

    /// Subgraph induced on the first `k` vertices.
    pub fn prefix(&self, k: usize) -> Self {
        Self::from_edges(k, self.edges().filter(|&(_, v)| v < k)).unwrap()
    }

    /// The full vertex mask.
    pub fn all(&self) -> VertexMask {
        VertexMask::full(self.n())
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbor_set(&self, v: Vertex) -> FixedBitSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// A set of surviving vertices. Operations that take a mask treat every
/// vertex outside it as deleted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexMask(FixedBitSet);

impl VertexMask {
    pub fn full(n: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(n);
        b.insert_range(..);
        VertexMask(b)
    }

    pub fn none(n: usize) -> Self {
        VertexMask(FixedBitSet::with_capacity(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vs: I) -> Self {
        let mut b = FixedBitSet::with_capacity(n);
        for v in vs {
            b.insert(v);
        }
        VertexMask(b)
    }

    pub fn from_bits(bits: FixedBitSet) -> Self {
        VertexMask(bits)
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.0.insert(v);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.0.set(v, false);
    }

    /// Deletes every vertex of `set`.
    pub fn remove_all(&mut self, set: &FixedBitSet) {
        self.0.difference_with(set);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.ones()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An ordered vertex sequence intended as a path. Its length is the number
/// of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    /// Vertices that are not ends.
    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }
}

/// A cyclic vertex sequence claimed to be a hole.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct HoleWitness(pub Vec<Vertex>);

impl HoleWitness {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Position-indexed successor and predecessor on the cycle.
    pub fn next(&self, i: usize) -> Vertex {
        self.0[(i + 1) % self.0.len()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.0.len()).map(move |i| (self.0[i], self.next(i)))
    }
}

/// Checks that `seq` is an induced path of `g` inside `mask`.
///
/// Returns `Ok(false)` when a vertex lies outside the mask or a
/// consecutive pair is non-adjacent or a non-consecutive pair is adjacent.
pub fn is_induced_path(g: &Graph, mask: &VertexMask, seq: &[Vertex]) -> Result<bool, GraphError> {
    let n = g.n();
    let mut seen = FixedBitSet::with_capacity(n);
    for &v in seq {
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        if seen.put(v) {
            return Err(GraphError::RepeatedVertex(v));
        }
    }
    if seq.iter().any(|&v| !mask.contains(v)) {
        return Ok(false);
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if g.has_edge(seq[i], seq[j]) != (j == i + 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `seq` is a hole of `g`: at least four distinct vertices,
/// cyclically consecutive pairs adjacent, no chords.
pub fn is_hole(g: &Graph, seq: &[Vertex]) -> bool {
    let k = seq.len();
    if k < 4 || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(g.n());
    if seq.iter().any(|&v| seen.put(v)) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(seq[i], seq[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// True iff `w` is a chordless cycle of odd length at least five.
pub fn is_odd_hole(g: &Graph, w: &HoleWitness) -> bool {
    w.len() % 2 == 1 && is_hole(g, w.vertices())
}

pub const UNREACHABLE: u32 = u32::MAX;

/// Unweighted distances from one source inside a mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    source: Vertex,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn source(&self) -> Vertex {
        self.source
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Option<usize> {
        match self.dist[v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    #[inline]
    pub fn raw(&self, v: Vertex) -> u32 {
        self.dist[v]
    }

    pub fn as_options(&self) -> Vec<Option<usize>> {
        (0..self.dist.len()).map(|v| self.get(v)).collect()
    }

    /// Walks back from `target` to the source, always stepping to the
    /// lowest-numbered neighbour one layer closer. Returns the path from the
    /// source to `target`.
    pub fn path_to(&self, g: &Graph, target: Vertex) -> Option<Path> {
        let mut d = self.dist[target];
        if d == UNREACHABLE {
            return None;
        }
        let mut rev = Vec::with_capacity(d as usize + 1);
        let mut cur = target;
        rev.push(cur);
        while d > 0 {
            cur = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| self.dist[w] == d - 1)
                .expect("BFS layers are consistent");
            rev.push(cur);
            d -= 1;
        }
        rev.reverse();
        Some(Path(rev))
    }
}

/// Breadth-first distances from `source` in `G[mask]`. Vertices outside the
/// mask, and those the source cannot reach, are unreachable.
pub fn bfs_distances(g: &Graph, mask: &VertexMask, source: Vertex) -> DistanceTable {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    if mask.contains(source) {
        dist[source] = 0;
        let mut queue = VecDeque::with_capacity(n);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHABLE && mask.contains(w) {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { source, dist }
}

/// A shortest `u`-`v` path in `G[mask]`, choosing the lowest-numbered
/// predecessor at every step. Shortest paths are always induced.
pub fn shortest_path(g: &Graph, mask: &VertexMask, u: Vertex, v: Vertex) -> Option<Path> {
    if !mask.contains(u) || !mask.contains(v) {
        return None;
    }
    bfs_distances(g, mask, u).path_to(g, v)
}

/// Union of the interiors of all shortest `u`-`v` paths in `G[mask]`.
pub fn shortest_path_union_interior(g: &Graph, mask: &VertexMask, u: Vertex, v: Vertex) -> VertexMask {
    let du = bfs_distances(g, mask, u);
    let dv = bfs_distances(g, mask, v);
    union_interior_from(&du, &dv, u, v, g.n())
}

/// Same as [`shortest_path_union_interior`] for precomputed tables rooted at
/// the two ends.
pub fn union_interior_from(du: &DistanceTable, dv: &DistanceTable, u: Vertex, v: Vertex, n: usize) -> VertexMask {
    let mut out = VertexMask::none(n);
    let Some(t) = du.get(v) else { return out };
    for w in 0..n {
        if w == u || w == v {
            continue;
        }
        if let (Some(a), Some(b)) = (du.get(w), dv.get(w)) {
            if a + b == t {
                out.insert(w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_with_chord() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c7 = Graph::cycle(7);
        assert_eq!(c7.complement().complement(), c7);
        let c5c = Graph::cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!(is_odd_hole(&c5c, &HoleWitness(vec![0, 2, 4, 1, 3])));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::ParallelEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn induced_path_examples() {
        let p4 = Graph::path(4);
        let full = p4.all();
        assert_eq!(is_induced_path(&p4, &full, &[0, 1, 2, 3]), Ok(true));
        let c4 = Graph::cycle(4);
        assert_eq!(is_induced_path(&c4, &c4.all(), &[0, 1, 2, 3]), Ok(false));
        assert_eq!(is_induced_path(&p4, &full, &[0, 1, 0]), Err(GraphError::RepeatedVertex(0)));
        let mut m = p4.all();
        m.remove(2);
        assert_eq!(is_induced_path(&p4, &m, &[1, 2, 3]), Ok(false));
    }

    #[test]
    fn odd_hole_examples() {
        assert!(is_odd_hole(&Graph::cycle(5), &HoleWitness(vec![0, 1, 2, 3, 4])));
        assert!(!is_odd_hole(&Graph::cycle(6), &HoleWitness((0..6).collect())));
        assert!(!is_odd_hole(&c5_with_chord(), &HoleWitness(vec![0, 1, 2, 3, 4])));
        assert!(!is_odd_hole(&Graph::complete(3), &HoleWitness(vec![0, 1, 2])));
    }

    #[test]
    fn bfs_examples() {
        let p4 = Graph::path(4);
        assert_eq!(bfs_distances(&p4, &p4.all(), 0).as_options(), vec![Some(0), Some(1), Some(2), Some(3)]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = bfs_distances(&two, &two.all(), 0);
        assert_eq!(d.get(2), None);
        assert_eq!(d.get(3), None);
        let c7 = Graph::cycle(7);
        let d: Vec<_> = bfs_distances(&c7, &c7.all(), 0).as_options().into_iter().map(Option::unwrap).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn shortest_path_examples() {
        let c7 = Graph::cycle(7);
        assert_eq!(shortest_path(&c7, &c7.all(), 0, 3), Some(Path(vec![0, 1, 2, 3])));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(shortest_path(&two, &two.all(), 0, 3), None);
        // tie-break picks the lowest predecessor
        let c6 = Graph::cycle(6);
        assert_eq!(shortest_path(&c6, &c6.all(), 0, 3), Some(Path(vec![0, 1, 2, 3])));
    }

    #[test]
    fn union_interior_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(shortest_path_union_interior(&c6, &c6.all(), 0, 3).to_vec(), vec![1, 2, 4, 5]);
        let p4 = Graph::path(4);
        assert_eq!(shortest_path_union_interior(&p4, &p4.all(), 0, 3).to_vec(), vec![1, 2]);
        assert!(shortest_path_union_interior(&p4, &p4.all(), 0, 1).is_empty());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
