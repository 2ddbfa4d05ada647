//! Executable versions of the structural definitions around a hole: major
//! vertices, cleanness, gaps and heavy edges. The lemma test suites are
//! written against these.

use serde::Serialize;

use crate::graph::{Graph, HoleWitness, Path, Vertex, VertexMask};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub path: Path,
    pub length: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub gaps: Vec<Gap>,
}

impl GapReport {
    pub fn lengths(&self) -> Vec<usize> {
        self.gaps.iter().map(|g| g.length).collect()
    }
}

/// Positions (indices into `c`) of the neighbours of `v` on the hole.
fn positions_on(g: &Graph, c: &HoleWitness, v: Vertex) -> Vec<usize> {
    (0..c.len()).filter(|&i| g.has_edge(v, c.0[i])).collect()
}

/// True iff the positions all lie in some window `{i, i+1, i+2}` mod `k`.
fn fits_three_window(pos: &[usize], k: usize) -> bool {
    if pos.is_empty() {
        return true;
    }
    (0..k).any(|i| pos.iter().all(|&p| (p + k - i) % k <= 2))
}

pub fn is_major(g: &Graph, c: &HoleWitness, v: Vertex) -> bool {
    !c.0.contains(&v) && !fits_three_window(&positions_on(g, c, v), c.len())
}

pub fn c_major_vertices(g: &Graph, c: &HoleWitness) -> VertexMask {
    VertexMask::from_vertices(g.n(), (0..g.n()).filter(|&v| is_major(g, c, v)))
}

pub fn is_clean(g: &Graph, c: &HoleWitness) -> bool {
    (0..g.n()).all(|v| !is_major(g, c, v))
}

/// The `A`-gaps of the hole, one per component of `C \ A`.
///
/// With `A` empty the only component is the whole cycle, reported as a
/// closed walk of length `|C|`; with a single vertex `a` the gap runs from
/// `a` around the cycle back to `a`, again of length `|C|`.
pub fn a_gaps(c: &HoleWitness, a: &VertexMask) -> GapReport {
    let k = c.len();
    let in_a: Vec<bool> = c.0.iter().map(|&v| a.contains(v)).collect();
    let Some(start) = in_a.iter().position(|&b| b) else {
        if k == 0 {
            return GapReport::default();
        }
        let mut walk = c.0.clone();
        walk.push(c.0[0]);
        return GapReport { gaps: vec![Gap { path: Path(walk), length: k }] };
    };
    let mut gaps = Vec::new();
    let mut i = start;
    loop {
        // next member of A after position i
        let mut j = (i + 1) % k;
        while !in_a[j] {
            j = (j + 1) % k;
        }
        let steps = (j + k - i) % k;
        let steps = if steps == 0 { k } else { steps };
        if steps >= 2 {
            let walk: Vec<Vertex> = (0..=steps).map(|s| c.0[(i + s) % k]).collect();
            gaps.push(Gap { path: Path(walk), length: steps });
        }
        i = j;
        if i == start {
            break;
        }
    }
    GapReport { gaps }
}

/// True iff every `A`-gap has even length.
pub fn is_normal(c: &HoleWitness, a: &VertexMask) -> bool {
    a_gaps(c, a).gaps.iter().all(|g| g.length % 2 == 0)
}

/// The `x`-gaps: induced paths of `C` of length at least two whose ends see
/// `x` and whose interior does not. An arc that wraps all the way round
/// between two adjacent neighbours is not induced in `C`, so it is no gap.
pub fn x_gaps(g: &Graph, c: &HoleWitness, x: Vertex) -> GapReport {
    let k = c.len();
    let nbrs = VertexMask::from_vertices(g.n(), c.0.iter().copied().filter(|&v| g.has_edge(x, v)));
    if c.0.contains(&x) || nbrs.len() < 2 {
        return GapReport::default();
    }
    let mut r = a_gaps(c, &nbrs);
    r.gaps.retain(|gap| gap.length + 2 <= k);
    r
}

/// Edges `uv` of `C` with `u, v` outside `xset` such that every member of
/// `xset` is adjacent to `u` or `v`.
pub fn x_heavy_edges(g: &Graph, c: &HoleWitness, xset: &VertexMask) -> Vec<(Vertex, Vertex)> {
    c.edges()
        .filter(|&(u, v)| {
            !xset.contains(u) && !xset.contains(v) && xset.iter().all(|x| g.has_edge(x, u) || g.has_edge(x, v))
        })
        .collect()
}
