//! The six-type detector for candidate graphs.
//!
//! A shortest odd hole `C` of a candidate has a major vertex `x` with a
//! long gap `D` between `d1` and `d2`, and an edge `c2c3` that dominates
//! every other major vertex not adjacent to `x`. The six types split on
//! whether `c2 = d1`, whether `c3` lies inside `D`, and whether `D` is
//! shorter or longer than half of `C`. Each type guesses a handful of hole
//! vertices, deletes everything that could spoil shortest paths, and then
//! rebuilds the rest of the hole from shortest paths. Types 4 to 6 are
//! derived in `docs/derived-types.md`.
//!
//! Every hole is assembled explicitly and verified before it is returned.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clean::{classify_candidate, induced_p4s, CandidateResult};
use crate::graph::{bfs_distances, is_induced_path, is_odd_hole, DistanceTable, Graph, HoleWitness, Path, Vertex, VertexMask};
use crate::simple::{common_neighbors, induced_p3s, DetectionResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HoleType {
    Type1,
    Type2,
    Type3,
    Type4,
    Type5,
    Type6,
}

impl HoleType {
    pub const ALL: [HoleType; 6] =
        [HoleType::Type1, HoleType::Type2, HoleType::Type3, HoleType::Type4, HoleType::Type5, HoleType::Type6];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Self> {
        HoleType::ALL.get((k as usize).checked_sub(1)?).copied()
    }
}

impl fmt::Display for HoleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for HoleType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .parse::<u8>()
            .ok()
            .and_then(HoleType::from_number)
            .ok_or_else(|| format!("hole type must be 1..6, got {s:?}"))
    }
}

/// Where the paths of a linkage instance end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hub {
    /// All paths end at `h`.
    Single(Vertex),
    /// Paths from `A` end at the first vertex and paths from `B` at the
    /// second; the two count as one identified hub.
    Identified(Vertex, Vertex),
}

impl Hub {
    fn end_for_a(self) -> Vertex {
        match self {
            Hub::Single(h) | Hub::Identified(h, _) => h,
        }
    }

    fn end_for_b(self) -> Vertex {
        match self {
            Hub::Single(h) | Hub::Identified(_, h) => h,
        }
    }

    fn contains(self, v: Vertex) -> bool {
        match self {
            Hub::Single(h) => v == h,
            Hub::Identified(h1, h2) => v == h1 || v == h2,
        }
    }
}

/// Input to [`odd_linkage`]: disjoint sets `A`, `B`, a hub, and for every
/// `v` in `A ∪ B` an induced path `paths[v]` from `v` to the hub.
#[derive(Debug, Clone)]
pub struct LinkageInstance<'g> {
    pub graph: &'g Graph,
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub hub: Hub,
    pub paths: Vec<Option<Path>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkageError {
    #[error("vertex {0} is in both A and B")]
    Overlap(Vertex),
    #[error("hub vertex {0} is in A ∪ B or adjacent to it")]
    HubTouches(Vertex),
    #[error("path for {0} is missing, not induced, or does not run to the hub")]
    BadPath(Vertex),
    #[error("path for {0} meets another vertex of A ∪ B")]
    PathHitsTerminal(Vertex),
}

impl<'g> LinkageInstance<'g> {
    pub fn validate(&self) -> Result<(), LinkageError> {
        let g = self.graph;
        let n = g.n();
        let terminals = VertexMask::from_vertices(n, self.a.iter().chain(&self.b).copied());
        if let Some(&v) = self.a.iter().find(|v| self.b.contains(v)) {
            return Err(LinkageError::Overlap(v));
        }
        let hubs: Vec<Vertex> = match self.hub {
            Hub::Single(h) => vec![h],
            Hub::Identified(h1, h2) => vec![h1, h2],
        };
        for &h in &hubs {
            if terminals.contains(h) || g.neighbors(h).iter().any(|&w| terminals.contains(w)) {
                return Err(LinkageError::HubTouches(h));
            }
        }
        let all = g.all();
        for (side_a, &v) in self.a.iter().map(|v| (true, v)).chain(self.b.iter().map(|v| (false, v))) {
            let end = if side_a { self.hub.end_for_a() } else { self.hub.end_for_b() };
            let p = self.paths.get(v).and_then(Option::as_ref).ok_or(LinkageError::BadPath(v))?;
            if p.first() != v || p.last() != end || !is_induced_path(g, &all, p.vertices()).unwrap_or(false) {
                return Err(LinkageError::BadPath(v));
            }
            if p.vertices()[1..].iter().any(|&w| terminals.contains(w)) {
                return Err(LinkageError::PathHitsTerminal(v));
            }
        }
        Ok(())
    }
}

/// Per-path data for the pairwise test: the path's vertices other than a
/// shared hub, and their closed neighbourhood.
struct PathSets {
    own: FixedBitSet,
    reach: FixedBitSet,
}

fn path_sets(g: &Graph, p: &Path, drop: Option<Vertex>) -> PathSets {
    let n = g.n();
    let mut own = FixedBitSet::with_capacity(n);
    let mut reach = FixedBitSet::with_capacity(n);
    for &v in p.vertices() {
        if Some(v) == drop {
            continue;
        }
        own.insert(v);
        reach.insert(v);
        reach.union_with(g.neighbor_set(v));
    }
    PathSets { own, reach }
}

/// All pairs `(a, b)` in order whose paths join into an induced path (for a
/// single hub) or are disjoint and anticomplete (for an identified hub).
///
/// In the augmented graph where each terminal sees its whole path, `a` and
/// `b` are at distance four exactly when this holds, provided only the two
/// paths are present. Restricting to the two paths matters: a short cut
/// through a third path would otherwise hide a valid pair.
fn linkage_pairs<'a>(
    g: &'a Graph,
    a: &'a [Vertex],
    b: &'a [Vertex],
    hub: Hub,
    paths: &'a [Option<Path>],
) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
    let drop = match hub {
        Hub::Single(h) => Some(h),
        Hub::Identified(..) => None,
    };
    let sa: Vec<(Vertex, PathSets)> =
        a.iter().filter_map(|&v| paths[v].as_ref().map(|p| (v, path_sets(g, p, drop)))).collect();
    let sb: Vec<(Vertex, PathSets)> =
        b.iter().filter_map(|&v| paths[v].as_ref().map(|p| (v, path_sets(g, p, drop)))).collect();
    sa.into_iter().flat_map(move |(va, pa)| {
        sb.iter()
            .filter(move |(_, pb)| pa.reach.is_disjoint(&pb.own))
            .map(move |&(vb, _)| (va, vb))
            .collect::<Vec<_>>()
    })
}

/// Finds `a ∈ A`, `b ∈ B` whose paths form an induced `a`-`b` path through
/// the hub, or, with an identified hub, are disjoint with no edges between
/// them. The first pair in `A`-major order is returned.
pub fn odd_linkage(inst: &LinkageInstance<'_>) -> Result<Option<(Vertex, Vertex)>, LinkageError> {
    inst.validate()?;
    Ok(linkage_pairs(inst.graph, &inst.a, &inst.b, inst.hub, &inst.paths).next())
}

/// Distance between `a` and `b` in the augmented graph on `R_a ∪ R_b`,
/// where each terminal is joined to every vertex of its own path except the
/// hub. With an identified hub the two ends are merged first. This is the
/// literal form of the linkage test. For a single hub [`odd_linkage`] is
/// equivalent to distance four; for an identified hub it is stricter, since
/// merging hides edges from one path to the other path's end.
pub fn augmented_distance(g: &Graph, ra: &Path, rb: &Path, hub: Hub) -> Option<usize> {
    let (a, b) = (ra.first(), rb.first());
    let merged = |v: Vertex| if hub.contains(v) { hub.end_for_a() } else { v };
    let mut verts: Vec<Vertex> = ra.vertices().iter().chain(rb.vertices()).map(|&v| merged(v)).collect();
    verts.sort_unstable();
    verts.dedup();
    let idx = |v: Vertex| verts.binary_search(&merged(v)).ok();
    let k = verts.len();
    let mut adj = vec![vec![false; k]; k];
    let originals: Vec<Vertex> = ra.vertices().iter().chain(rb.vertices()).copied().collect();
    for &u in &originals {
        for &v in &originals {
            if u != v && g.has_edge(u, v) {
                let (i, j) = (idx(u)?, idx(v)?);
                if i != j {
                    adj[i][j] = true;
                }
            }
        }
    }
    for p in [ra, rb] {
        let t = idx(p.first())?;
        for &w in p.vertices() {
            if !hub.contains(w) && w != p.first() {
                let j = idx(w)?;
                adj[t][j] = true;
                adj[j][t] = true;
            }
        }
    }
    let (s, e) = (idx(a)?, idx(b)?);
    let mut dist = vec![usize::MAX; k];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..k {
            if adj[u][v] && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    (dist[e] != usize::MAX).then_some(dist[e])
}

// ---------------------------------------------------------------------------
// shared pieces

fn singleton(n: usize, v: Vertex) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert(v);
    s
}

fn mask_without(g: &Graph, sets: &[&FixedBitSet]) -> VertexMask {
    let mut m = g.all();
    for s in sets {
        m.remove_all(s);
    }
    m
}

/// `N[x]` minus the listed survivors.
fn closed_nbhd_except(g: &Graph, x: Vertex, keep: &[Vertex]) -> FixedBitSet {
    let mut s = g.closed_neighbor_set(x);
    for &k in keep {
        s.set(k, false);
    }
    s
}

/// Vertices of `mask` other than the two ends lying on a shortest path
/// between them.
fn geodesic_interior(mask: &VertexMask, da: &DistanceTable, db: &DistanceTable, t: usize, ends: [Vertex; 2]) -> FixedBitSet {
    let mut y = FixedBitSet::with_capacity(mask.capacity());
    for v in mask.iter() {
        if ends.contains(&v) {
            continue;
        }
        if let (Some(p), Some(q)) = (da.get(v), db.get(v)) {
            if p + q == t {
                y.insert(v);
            }
        }
    }
    y
}

/// Vertices outside `y` and `keep` that have a neighbour in `y`.
fn boundary(g: &Graph, y: &FixedBitSet, keep: &[Vertex]) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.n());
    for v in 0..g.n() {
        if keep.contains(&v) || y.contains(v) {
            continue;
        }
        if !g.neighbor_set(v).is_disjoint(y) {
            out.insert(v);
        }
    }
    out
}

/// Shortest paths from each start to `target` whose vertices other than the
/// start lie in `region`. The start itself need not be in the region.
struct PathsTo {
    target: Vertex,
    dist: DistanceTable,
}

impl PathsTo {
    fn new(g: &Graph, region: &VertexMask, target: Vertex) -> Self {
        let mut m = region.clone();
        m.insert(target);
        PathsTo { target, dist: bfs_distances(g, &m, target) }
    }

    fn path_from(&self, g: &Graph, v: Vertex) -> Option<Path> {
        if v == self.target {
            return Some(Path(vec![v]));
        }
        let w = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.dist.get(w).is_some())
            .min_by_key(|&w| (self.dist.raw(w), w))?;
        let mut p = self.dist.path_to(g, w)?.reversed();
        p.0.insert(0, v);
        Some(p)
    }
}

fn verified(g: &Graph, cyc: Vec<Vertex>) -> Option<HoleWitness> {
    let w = HoleWitness(cyc);
    is_odd_hole(g, &w).then_some(w)
}

/// The two halves of `D`: a shortest `d1`-`d3` path inside `y1 ∪ {d1}` and a
/// shortest `d3`-`d2` path inside `y2 ∪ {d2}` that keeps away from the first
/// half. Returns `D` from `d1` to `d2`.
fn long_gap(g: &Graph, y1: &FixedBitSet, y2: &FixedBitSet, d1: Vertex, d3: Vertex, d2: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    let half = |y: &FixedBitSet, from: Vertex, avoid: &FixedBitSet| {
        let mut m = VertexMask::from_bits(y.clone());
        m.remove_all(avoid);
        m.insert(from);
        m.insert(d3);
        bfs_distances(g, &m, from).path_to(g, d3)
    };
    let none = FixedBitSet::with_capacity(n);
    let try_order = |first: (&FixedBitSet, Vertex), second: (&FixedBitSet, Vertex)| -> Option<(Path, Path)> {
        let p1 = half(first.0, first.1, &none)?;
        let mut avoid = FixedBitSet::with_capacity(n);
        for &v in &p1.vertices()[..p1.vertices().len() - 1] {
            avoid.union_with(&g.closed_neighbor_set(v));
        }
        avoid.set(d3, false);
        let p2 = half(second.0, second.1, &avoid)?;
        Some((p1, p2))
    };
    if let Some((p1, p2)) = try_order((y1, d1), (y2, d2)) {
        let mut d = p1.0;
        d.extend(p2.vertices().iter().rev().skip(1));
        return Some(d);
    }
    let (p2, p1) = try_order((y2, d2), (y1, d1))?;
    let mut d = p1.0;
    d.extend(p2.vertices().iter().rev().skip(1));
    Some(d)
}

// ---------------------------------------------------------------------------
// types 1 and 2: c2 != d1

/// Sets shared by types 1 and 2 for one choice of `c2, c3, d1, x, d2`.
struct EdgeGuess {
    x1: FixedBitSet,
    x2: FixedBitSet,
    gp: VertexMask,
}

fn edge_guess(g: &Graph, c2: Vertex, c3: Vertex, [d1, x, d2]: [Vertex; 3]) -> Option<EdgeGuess> {
    if [d1, x, d2].iter().any(|&v| v == c2 || v == c3) {
        return None;
    }
    let mut x1 = common_neighbors(g, d1, d2);
    x1.set(x, false);
    let mut x2 = g.neighbor_set(c2).clone();
    x2.union_with(g.neighbor_set(c3));
    for v in [x, c2, c3, d1, d2] {
        x2.set(v, false);
    }
    let nx = closed_nbhd_except(g, x, &[d1, d2]);
    let gp = mask_without(g, &[&x1, &x2, &nx]);
    (gp.contains(d1) && gp.contains(d2)).then_some(EdgeGuess { x1, x2, gp })
}

/// `N(a) \ N[b]` minus `x`.
fn private_nbrs(g: &Graph, a: Vertex, b: Vertex, x: Vertex) -> Vec<Vertex> {
    g.neighbors(a).iter().copied().filter(|&v| v != b && v != x && !g.has_edge(v, b)).collect()
}

fn split_parity(paths: &[Option<Path>], vs: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    vs.iter().filter(|&&v| paths[v].is_some()).partition(|&&v| paths[v].as_ref().unwrap().len().is_multiple_of(2))
}

fn type1_edge(g: &Graph, c2: Vertex, c3: Vertex, p3s: &[[Vertex; 3]]) -> Option<HoleWitness> {
    let n = g.n();
    for &d in p3s {
        let [d1, x, d2] = d;
        let Some(eg) = edge_guess(g, c2, c3, d) else { continue };
        let t1 = bfs_distances(g, &eg.gp, d1);
        let t2 = bfs_distances(g, &eg.gp, d2);
        let Some(t) = t1.get(d2) else { continue };
        let y = geodesic_interior(&eg.gp, &t1, &t2, t, [d1, d2]);
        let x3 = boundary(g, &y, &[x, d1, d2]);
        let xs = singleton(g.n(), x);
        let gpp = mask_without(g, &[&eg.x1, &eg.x2, &x3, &xs]);
        let mut z = gpp.clone();
        z.remove_all(&g.closed_neighbor_set(c2));
        z.remove_all(&g.closed_neighbor_set(c3));
        let c1s = private_nbrs(g, c2, c3, x);
        let c4s = private_nbrs(g, c3, c2, x);
        if c1s.is_empty() || c4s.is_empty() {
            continue;
        }
        for d3 in z.iter() {
            if d3 == d1 || d3 == d2 {
                continue;
            }
            let to = PathsTo::new(g, &z, d3);
            let mut paths = vec![None; n];
            let keep = |v: &Vertex| *v != d3 && !g.has_edge(*v, d3);
            for &v in c1s.iter().chain(&c4s).filter(|v| keep(v)) {
                paths[v] = to.path_from(g, v);
            }
            let a: Vec<Vertex> = c1s.iter().copied().filter(keep).collect();
            let b: Vec<Vertex> = c4s.iter().copied().filter(keep).collect();
            let (a_even, a_odd) = split_parity(&paths, &a);
            let (b_even, b_odd) = split_parity(&paths, &b);
            for (sa, sb) in [(&a_even, &b_even), (&a_odd, &b_odd)] {
                for (va, vb) in linkage_pairs(g, sa, sb, Hub::Single(d3), &paths) {
                    let ra = paths[va].as_ref().unwrap();
                    let rb = paths[vb].as_ref().unwrap();
                    let mut cyc = vec![c2];
                    cyc.extend_from_slice(ra.vertices());
                    cyc.extend(rb.vertices().iter().rev().skip(1));
                    cyc.push(c3);
                    if let Some(w) = verified(g, cyc) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn type2_edge(g: &Graph, c2: Vertex, c3: Vertex, p3s: &[[Vertex; 3]]) -> Option<HoleWitness> {
    let n = g.n();
    for &d in p3s {
        let [d1, x, d2] = d;
        let Some(eg) = edge_guess(g, c2, c3, d) else { continue };
        let t1 = bfs_distances(g, &eg.gp, d1);
        let t2 = bfs_distances(g, &eg.gp, d2);
        for d3 in eg.gp.iter() {
            if [c2, c3, d1, x, d2].contains(&d3) {
                continue;
            }
            let (Some(t), Some(t_other)) = (t1.get(d3), t2.get(d3)) else { continue };
            if t != t_other {
                continue;
            }
            let t3 = bfs_distances(g, &eg.gp, d3);
            let y1 = geodesic_interior(&eg.gp, &t1, &t3, t, [d1, d2]);
            let y2 = geodesic_interior(&eg.gp, &t2, &t3, t, [d1, d2]);
            let mut y = y1.clone();
            y.union_with(&y2);
            let x3 = boundary(g, &y, &[x, d1, d2]);
            let xs = singleton(g.n(), x);
            let gpp = mask_without(g, &[&eg.x1, &eg.x2, &x3, &xs]);
            let mut z = gpp.clone();
            z.remove_all(&g.closed_neighbor_set(c2));
            z.remove_all(&g.closed_neighbor_set(c3));
            z.remove_all(&y);
            let Some(dpath) = long_gap(g, &y1, &y2, d1, d3, d2) else { continue };

            let usable = |v: &Vertex| *v != d3 && !g.has_edge(*v, d3) && !y.contains(*v) && !x3.contains(*v);
            let a: Vec<Vertex> = private_nbrs(g, c2, c3, x).into_iter().filter(usable).collect();
            let b: Vec<Vertex> = private_nbrs(g, c3, c2, x).into_iter().filter(usable).collect();
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let to1 = PathsTo::new(g, &z, d1);
            let to2 = PathsTo::new(g, &z, d2);
            let mut paths = vec![None; n];
            for &v in &a {
                paths[v] = to1.path_from(g, v);
            }
            for &v in &b {
                paths[v] = to2.path_from(g, v);
            }
            let (a_even, a_odd) = split_parity(&paths, &a);
            let (b_even, b_odd) = split_parity(&paths, &b);
            for (sa, sb) in [(&a_even, &b_even), (&a_odd, &b_odd)] {
                for (va, vb) in linkage_pairs(g, sa, sb, Hub::Identified(d1, d2), &paths) {
                    let ra = paths[va].as_ref().unwrap();
                    let rb = paths[vb].as_ref().unwrap();
                    let mut cyc = vec![c2];
                    cyc.extend_from_slice(ra.vertices());
                    cyc.extend_from_slice(&dpath[1..]);
                    cyc.extend(rb.vertices().iter().rev().skip(1));
                    cyc.push(c3);
                    if let Some(w) = verified(g, cyc) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// types 3 to 6: c2 = d1, so the guess is a P4 c1-d1-c3-c4 plus x and d2

/// Sets shared by types 3 to 6 for one choice of `c1, d1, c3, c4, x, d2`.
struct CornerGuess {
    x1: FixedBitSet,
    x2: FixedBitSet,
}

fn corner_guess(g: &Graph, p: &[Vertex; 4], x: Vertex, d2: Vertex) -> CornerGuess {
    let d1 = p[1];
    let mut x1 = common_neighbors(g, d1, d2);
    x1.set(x, false);
    let mut x2 = g.neighbor_set(p[1]).clone();
    x2.union_with(g.neighbor_set(p[2]));
    for &v in p {
        x2.set(v, false);
    }
    CornerGuess { x1, x2 }
}

/// The `(x, d2)` pairs completing a P4 `c1-d1-c3-c4` to a 7-tuple (minus
/// `d3`): `d1-x-d2` is induced and all six vertices are distinct.
fn corner_extensions(g: &Graph, p: &[Vertex; 4]) -> Vec<(Vertex, Vertex)> {
    let d1 = p[1];
    let mut out = Vec::new();
    for &x in g.neighbors(d1) {
        if p.contains(&x) {
            continue;
        }
        for &d2 in g.neighbors(x) {
            if d2 != d1 && !p.contains(&d2) && !g.has_edge(d1, d2) {
                out.push((x, d2));
            }
        }
    }
    out
}

/// Types 3 and 5: `D` short, based at `s = c1` (type 3) or `s = c3`
/// (type 5).
fn short_corner(g: &Graph, p: &[Vertex; 4], via_c3: bool) -> Option<HoleWitness> {
    let [c1, d1, c3, c4] = *p;
    let s = if via_c3 { c3 } else { c1 };
    for (x, d2) in corner_extensions(g, p) {
        let cg = corner_guess(g, p, x, d2);
        let nx = closed_nbhd_except(g, x, &[s, d2]);
        let gp = mask_without(g, &[&cg.x1, &cg.x2, &nx]);
        if !gp.contains(s) || !gp.contains(d2) {
            continue;
        }
        let ts = bfs_distances(g, &gp, s);
        let td = bfs_distances(g, &gp, d2);
        let Some(t) = ts.get(d2) else { continue };
        let y = geodesic_interior(&gp, &ts, &td, t, [s, d2]);
        let x3 = boundary(g, &y, &[x, s, d2]);
        let xs = singleton(g.n(), x);
        let mut z = mask_without(g, &[&cg.x1, &cg.x2, &x3, &xs]);
        z.remove_all(&g.closed_neighbor_set(d1));
        z.remove_all(&g.closed_neighbor_set(c3));
        // one search from each end covers every d3
        let from1 = region_distances(g, &z, c1);
        let from4 = region_distances(g, &z, c4);
        for d3 in z.iter() {
            if d3 == d2 || g.has_edge(d3, c1) || g.has_edge(d3, c4) {
                continue;
            }
            let (Some(l1), Some(l4)) = (from1.get(d3), from4.get(d3)) else { continue };
            if (l1 + l4) % 2 == 1 {
                continue;
            }
            let (Some(r1), Some(r4)) = (path_in_region(g, &from1, d3), path_in_region(g, &from4, d3)) else {
                continue;
            };
            let mut cyc = vec![d1];
            cyc.extend_from_slice(r1.vertices());
            cyc.extend(r4.vertices().iter().rev().skip(1));
            cyc.push(c3);
            if let Some(w) = verified(g, cyc) {
                return Some(w);
            }
        }
    }
    None
}

/// Distances from `start` where every vertex after the start lies in
/// `region`.
fn region_distances(g: &Graph, region: &VertexMask, start: Vertex) -> DistanceTable {
    let mut m = region.clone();
    m.insert(start);
    bfs_distances(g, &m, start)
}

fn path_in_region(g: &Graph, from: &DistanceTable, target: Vertex) -> Option<Path> {
    from.path_to(g, target)
}

/// Types 4 and 6: `D` long and split at its middle vertex `d3`. The rest of
/// the hole runs from `d2` back to `c4` (type 4, `c3` outside `D`) or to
/// `c1` (type 6, `c3` inside `D`).
fn long_corner(g: &Graph, p: &[Vertex; 4], c3_inside: bool) -> Option<HoleWitness> {
    let [c1, d1, c3, c4] = *p;
    for (x, d2) in corner_extensions(g, p) {
        let cg = corner_guess(g, p, x, d2);
        let nx = closed_nbhd_except(g, x, &[d1, d2]);
        let gp = mask_without(g, &[&cg.x1, &cg.x2, &nx]);
        if !gp.contains(d1) || !gp.contains(d2) {
            continue;
        }
        let t1 = bfs_distances(g, &gp, d1);
        let t2 = bfs_distances(g, &gp, d2);
        for d3 in gp.iter() {
            if [c1, d1, c3, c4, x, d2].contains(&d3) {
                continue;
            }
            let (Some(t), Some(t_other)) = (t1.get(d3), t2.get(d3)) else { continue };
            if t != t_other {
                continue;
            }
            let t3 = bfs_distances(g, &gp, d3);
            let y1 = geodesic_interior(&gp, &t1, &t3, t, [d1, d2]);
            let y2 = geodesic_interior(&gp, &t2, &t3, t, [d1, d2]);
            let mut y = y1.clone();
            y.union_with(&y2);
            let x3 = boundary(g, &y, &[x, d1, d2]);
            let xs = singleton(g.n(), x);
            let mut z = mask_without(g, &[&cg.x1, &cg.x2, &x3, &xs]);
            z.remove_all(&g.closed_neighbor_set(d1));
            z.remove_all(&g.closed_neighbor_set(c3));
            z.remove_all(&y);
            let Some(dpath) = long_gap(g, &y1, &y2, d1, d3, d2) else { continue };
            let start = if c3_inside { c1 } else { c4 };
            let Some(r) = PathsTo::new(g, &z, d2).path_from(g, start) else { continue };
            let mut cyc = dpath;
            cyc.extend(r.vertices().iter().rev().skip(1));
            if !c3_inside {
                cyc.push(c3);
            }
            if let Some(w) = verified(g, cyc) {
                return Some(w);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// entry points

fn ordered_edges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect()
}

fn run_type(g: &Graph, ty: HoleType) -> Option<HoleWitness> {
    if g.n() < 5 {
        return None;
    }
    match ty {
        HoleType::Type1 | HoleType::Type2 => {
            let p3s = induced_p3s(g);
            ordered_edges(g).par_iter().find_map_first(|&(c2, c3)| match ty {
                HoleType::Type1 => type1_edge(g, c2, c3, &p3s),
                _ => type2_edge(g, c2, c3, &p3s),
            })
        }
        _ => induced_p4s(g).par_iter().find_map_first(|p| match ty {
            HoleType::Type3 => short_corner(g, p, false),
            HoleType::Type4 => long_corner(g, p, false),
            HoleType::Type5 => short_corner(g, p, true),
            _ => long_corner(g, p, true),
        }),
    }
}

pub fn detect_type1(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type1))
}

pub fn detect_type2(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type2))
}

pub fn detect_type3(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type3))
}

pub fn detect_type4(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type4))
}

pub fn detect_type5(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type5))
}

pub fn detect_type6(g: &Graph) -> DetectionResult {
    DetectionResult::from_option(run_type(g, HoleType::Type6))
}

/// Runs the listed type detectors in the given order; first hole wins.
pub fn detect_types(g: &Graph, types: &[HoleType]) -> DetectionResult {
    DetectionResult::from_option(types.iter().find_map(|&t| run_type(g, t)))
}

/// All six type detectors on a candidate graph.
pub fn detect_fast(g: &Graph) -> DetectionResult {
    detect_types(g, &HoleType::ALL)
}

/// Full detection: classification, then the six type detectors.
pub fn detect(g: &Graph) -> DetectionResult {
    if g.n() < 5 {
        return DetectionResult::NoOddHole;
    }
    match classify_candidate(g) {
        CandidateResult::OddHoleFound(w) => DetectionResult::OddHoleFound(w),
        CandidateResult::IsCandidate => detect_fast(g),
    }
}
