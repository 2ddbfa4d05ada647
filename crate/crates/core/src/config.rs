//! Pyramids and jewels: configurations that are cheap to find and whose
//! presence already forces an odd hole.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{bfs_distances, is_induced_path, DistanceTable, Graph, HoleWitness, Path, Vertex};

/// Apex `v0`, base triangle `{v1, v2, v3}` and the three induced paths
/// `paths[i]` running from the apex to `base[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidWitness {
    pub apex: Vertex,
    pub base: [Vertex; 3],
    pub paths: [Path; 3],
}

/// Five vertices `v[0..5]` (the cycle `v1..v5`) and a path from `v1` to `v4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JewelWitness {
    pub v: [Vertex; 5],
    pub path: Path,
}

/// Either configuration, as reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ConfigWitness {
    Pyramid(PyramidWitness),
    Jewel(JewelWitness),
}

pub fn verify_pyramid(g: &Graph, w: &PyramidWitness) -> bool {
    let n = g.n();
    let a = w.apex;
    if a >= n || w.base.iter().any(|&b| b >= n || b == a) {
        return false;
    }
    let [b1, b2, b3] = w.base;
    if !(g.has_edge(b1, b2) && g.has_edge(b1, b3) && g.has_edge(b2, b3)) {
        return false;
    }
    let full = g.all();
    for (p, &b) in w.paths.iter().zip(&w.base) {
        let vs = p.vertices();
        if vs.len() < 2 || vs[0] != a || p.last() != b {
            return false;
        }
        if is_induced_path(g, &full, vs) != Ok(true) {
            return false;
        }
    }
    if w.paths.iter().filter(|p| p.len() >= 2).count() < 2 {
        return false;
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (pi, pj) = (&w.paths[i].vertices()[1..], &w.paths[j].vertices()[1..]);
            for &u in pi {
                for &v in pj {
                    if u == v {
                        return false;
                    }
                    if g.has_edge(u, v) && !(u == w.base[i] && v == w.base[j]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn verify_jewel(g: &Graph, w: &JewelWitness) -> bool {
    let n = g.n();
    let [v1, v2, v3, v4, v5] = w.v;
    if w.v.iter().any(|&v| v >= n) {
        return false;
    }
    if (0..5).any(|i| (i + 1..5).any(|j| w.v[i] == w.v[j])) {
        return false;
    }
    let e = |a, b| g.has_edge(a, b);
    if !(e(v1, v2) && e(v2, v3) && e(v3, v4) && e(v4, v5) && e(v5, v1)) {
        return false;
    }
    if e(v1, v3) || e(v2, v4) || e(v1, v4) {
        return false;
    }
    let p = w.path.vertices();
    if p.len() < 2 || p[0] != v1 || w.path.last() != v4 {
        return false;
    }
    let mut seen = FixedBitSet::with_capacity(n);
    for (i, &u) in p.iter().enumerate() {
        if u >= n || seen.put(u) {
            return false;
        }
        if i > 0 && !e(p[i - 1], u) {
            return false;
        }
    }
    w.path
        .interior()
        .iter()
        .all(|&u| !w.v.contains(&u) && !e(u, v2) && !e(u, v3) && !e(u, v5))
}

/// Finds a jewel, trying ordered 5-tuples in lexicographic order.
///
/// For each tuple matching the edge pattern the vertices of
/// `N(v2) ∪ N(v3) ∪ N(v5)` and the tuple itself are deleted (keeping `v1`,
/// `v4`), and a shortest `v1`-`v4` path in what is left becomes `P`.
pub fn find_jewel(g: &Graph) -> Option<JewelWitness> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    (0..n).into_par_iter().find_map_first(|v1| jewel_from(g, v1))
}

fn jewel_from(g: &Graph, v1: Vertex) -> Option<JewelWitness> {
    let e = |a, b| g.has_edge(a, b);
    for &v2 in g.neighbors(v1) {
        for &v3 in g.neighbors(v2) {
            if v3 == v1 || e(v1, v3) {
                continue;
            }
            for &v4 in g.neighbors(v3) {
                if v4 == v2 || v4 == v1 || e(v2, v4) || e(v1, v4) {
                    continue;
                }
                for &v5 in g.neighbors(v4) {
                    if v5 == v3 || v5 == v2 || !e(v5, v1) {
                        continue;
                    }
                    let mut mask = g.all();
                    for c in [v2, v3, v5] {
                        mask.remove_all(g.neighbor_set(c));
                        mask.remove(c);
                    }
                    mask.insert(v1);
                    mask.insert(v4);
                    if let Some(path) = bfs_distances(g, &mask, v1).path_to(g, v4) {
                        return Some(JewelWitness { v: [v1, v2, v3, v4, v5], path });
                    }
                }
            }
        }
    }
    None
}

/// Finds a pyramid.
///
/// The search enumerates the base triangle, the apex and the apex's
/// neighbour `s_i` on each path. For each path it then guesses a vertex
/// `m_i` and glues a shortest `s_i`-`m_i` path to a shortest `m_i`-`b_i`
/// path, both inside the region that avoids the apex's other neighbours
/// and the closed neighbourhoods of the other two `s_j` and `b_j`. Triples
/// of such candidate paths that fit together are returned after explicit
/// verification, so a reported pyramid is always genuine.
pub fn find_pyramid(g: &Graph) -> Option<PyramidWitness> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    let triangles: Vec<[Vertex; 3]> = (0..n)
        .flat_map(|b1| {
            g.neighbors(b1)
                .iter()
                .filter(move |&&b2| b2 > b1)
                .flat_map(move |&b2| {
                    g.neighbors(b2)
                        .iter()
                        .filter(move |&&b3| b3 > b2 && g.has_edge(b1, b3))
                        .map(move |&b3| [b1, b2, b3])
                })
        })
        .collect();
    triangles.par_iter().find_map_first(|&base| pyramid_on_base(g, base))
}

fn pyramid_on_base(g: &Graph, base: [Vertex; 3]) -> Option<PyramidWitness> {
    for apex in 0..g.n() {
        if base.contains(&apex) {
            continue;
        }
        let touching = base.iter().filter(|&&b| g.has_edge(apex, b)).count();
        if touching > 1 {
            continue;
        }
        // candidate apex neighbours on each path
        let cands: Vec<Vec<Vertex>> = (0..3)
            .map(|i| {
                let bi = base[i];
                if g.has_edge(apex, bi) {
                    return vec![bi];
                }
                g.neighbors(apex)
                    .iter()
                    .copied()
                    .filter(|&s| !base.contains(&s) && (0..3).all(|j| j == i || !g.has_edge(s, base[j])))
                    .collect()
            })
            .collect();
        for &s1 in &cands[0] {
            for &s2 in &cands[1] {
                if s2 == s1 || g.has_edge(s1, s2) {
                    continue;
                }
                for &s3 in &cands[2] {
                    if s3 == s1 || s3 == s2 || g.has_edge(s1, s3) || g.has_edge(s2, s3) {
                        continue;
                    }
                    if let Some(w) = pyramid_with_anchors(g, apex, base, [s1, s2, s3]) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn pyramid_with_anchors(g: &Graph, apex: Vertex, base: [Vertex; 3], s: [Vertex; 3]) -> Option<PyramidWitness> {
    let candidates: Vec<Vec<Path>> = (0..3).map(|i| path_candidates(g, apex, base, s, i)).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    // closed neighbourhood of each candidate minus the apex, for fast
    // compatibility checks
    let hoods: Vec<Vec<(FixedBitSet, FixedBitSet)>> = candidates
        .iter()
        .map(|ps| ps.iter().map(|p| path_sets(g, p)).collect())
        .collect();
    let compatible = |i: usize, pi: usize, j: usize, pj: usize| -> bool {
        let (ref body_i, ref hood_i) = hoods[i][pi];
        let (ref body_j, _) = hoods[j][pj];
        if !body_i.is_disjoint(body_j) {
            return false;
        }
        // the only permitted contact is b_i b_j: drop both and compare
        let mut hi = hood_i.clone();
        hi.set(base[j], false);
        let mut bj = body_j.clone();
        bj.set(base[j], false);
        if !hi.is_disjoint(&bj) {
            return false;
        }
        // base[j] may touch only base[i] on path i
        let bi_body = {
            let mut b = body_i.clone();
            b.set(base[i], false);
            b
        };
        bi_body.is_disjoint(g.neighbor_set(base[j]))
    };
    for (a, p1) in candidates[0].iter().enumerate() {
        for (b, p2) in candidates[1].iter().enumerate() {
            if !compatible(0, a, 1, b) {
                continue;
            }
            for (c, p3) in candidates[2].iter().enumerate() {
                if [p1, p2, p3].iter().filter(|p| p.len() >= 2).count() < 2 {
                    continue;
                }
                if !compatible(0, a, 2, c) || !compatible(1, b, 2, c) {
                    continue;
                }
                let w = PyramidWitness { apex, base, paths: [p1.clone(), p2.clone(), p3.clone()] };
                if verify_pyramid(g, &w) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Vertex set of `p` without the apex, and its closed neighbourhood.
fn path_sets(g: &Graph, p: &Path) -> (FixedBitSet, FixedBitSet) {
    let n = g.n();
    let mut body = FixedBitSet::with_capacity(n);
    let mut hood = FixedBitSet::with_capacity(n);
    for &v in &p.vertices()[1..] {
        body.insert(v);
        hood.insert(v);
        hood.union_with(g.neighbor_set(v));
    }
    (body, hood)
}

/// Candidate apex-to-`base[i]` paths through `s[i]`, one per choice of
/// splitting vertex, deduplicated.
fn path_candidates(g: &Graph, apex: Vertex, base: [Vertex; 3], s: [Vertex; 3], i: usize) -> Vec<Path> {
    let (si, bi) = (s[i], base[i]);
    if si == bi {
        return vec![Path(vec![apex, bi])];
    }
    let mut region = g.all();
    region.remove(apex);
    region.remove_all(g.neighbor_set(apex));
    for j in (0..3).filter(|&j| j != i) {
        for v in [s[j], base[j]] {
            region.remove(v);
            region.remove_all(g.neighbor_set(v));
        }
    }
    region.insert(si);
    region.insert(bi);
    let from_s = bfs_distances(g, &region, si);
    if from_s.get(bi).is_none() {
        return Vec::new();
    }
    let from_b = bfs_distances(g, &region, bi);
    let mut out: Vec<Path> = Vec::new();
    for m in region.iter() {
        let Some(q) = glue(g, &from_s, &from_b, m) else { continue };
        let mut vs = Vec::with_capacity(q.len() + 2);
        vs.push(apex);
        vs.extend_from_slice(&q);
        let p = Path(vs);
        if is_induced_path(g, &g.all(), p.vertices()) == Ok(true) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Shortest `s`-`m` path followed by shortest `m`-`b` path.
fn glue(g: &Graph, from_s: &DistanceTable, from_b: &DistanceTable, m: Vertex) -> Option<Vec<Vertex>> {
    let first = from_s.path_to(g, m)?;
    let second = from_b.path_to(g, m)?.reversed();
    let mut vs = first.0;
    vs.extend_from_slice(&second.vertices()[1..]);
    Some(vs)
}

/// Two of the three paths have the same parity; together with the base edge
/// joining their ends they form an odd hole.
pub fn odd_hole_from_pyramid(g: &Graph, w: &PyramidWitness) -> HoleWitness {
    debug_assert!(verify_pyramid(g, w));
    let (i, j) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| w.paths[i].len() % 2 == w.paths[j].len() % 2)
        .expect("pigeonhole on three parities");
    let mut cyc = w.paths[i].vertices().to_vec();
    let back = w.paths[j].vertices();
    cyc.extend(back[1..].iter().rev());
    HoleWitness(cyc)
}

/// Closes the jewel path through `v3, v2` (even path) or `v5` (odd path).
pub fn odd_hole_from_jewel(g: &Graph, w: &JewelWitness) -> HoleWitness {
    debug_assert!(verify_jewel(g, w));
    let [_, v2, v3, _, v5] = w.v;
    let mut cyc = w.path.vertices().to_vec();
    if w.path.len().is_multiple_of(2) {
        cyc.extend([v3, v2]);
    } else {
        cyc.push(v5);
    }
    HoleWitness(cyc)
}
