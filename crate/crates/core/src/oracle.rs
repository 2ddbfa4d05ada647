//! Exponential-time reference searches.
//!
//! These exist to cross-check the polynomial detectors on small graphs and
//! share no code with them beyond the graph primitives. Expect them to be
//! slow beyond roughly 16 sparse or 12 dense vertices.

use crate::config::{JewelWitness, PyramidWitness};
use crate::graph::{Graph, HoleWitness, Path, Vertex};

/// Finds an odd hole by depth-first search over induced paths.
///
/// Each hole is discovered from its smallest vertex `s`; a path grows only
/// with vertices larger than `s` that see no path vertex except the current
/// end (and possibly `s`, which closes the cycle).
pub fn oracle_find_odd_hole(g: &Graph) -> Option<HoleWitness> {
    find_hole_by(g, |len| len >= 5 && len % 2 == 1)
}

/// Every chordless cycle of length at least four, each reported once per
/// direction from its smallest vertex.
pub fn oracle_all_holes(g: &Graph) -> Vec<HoleWitness> {
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        collect_holes(g, &mut path, &mut out);
    }
    // keep one orientation: second vertex smaller than last
    out.retain(|h| h.0[1] < *h.0.last().unwrap());
    out
}

/// The shortest odd holes of `g`, one orientation each.
pub fn oracle_shortest_odd_holes(g: &Graph) -> Vec<HoleWitness> {
    let odd: Vec<_> = oracle_all_holes(g).into_iter().filter(|h| h.len() % 2 == 1).collect();
    let Some(min) = odd.iter().map(HoleWitness::len).min() else { return odd };
    odd.into_iter().filter(|h| h.len() == min).collect()
}

fn find_hole_by(g: &Graph, accept: impl Fn(usize) -> bool + Copy) -> Option<HoleWitness> {
    for s in 0..g.n() {
        let mut path = vec![s];
        if let Some(h) = extend(g, &mut path, accept) {
            return Some(h);
        }
    }
    None
}

fn sees_interior(g: &Graph, path: &[Vertex], w: Vertex) -> bool {
    // every path vertex except the first and the last
    path.len() > 2 && path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w))
}

fn extend(g: &Graph, path: &mut Vec<Vertex>, accept: impl Fn(usize) -> bool + Copy) -> Option<HoleWitness> {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) || sees_interior(g, path, w) {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(w, s);
        if closes {
            if path.len() >= 3 && accept(path.len() + 1) {
                let mut cyc = path.clone();
                cyc.push(w);
                return Some(HoleWitness(cyc));
            }
            continue;
        }
        path.push(w);
        let found = extend(g, path, accept);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn collect_holes(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<HoleWitness>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) || sees_interior(g, path, w) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            if path.len() >= 3 {
                let mut cyc = path.clone();
                cyc.push(w);
                out.push(HoleWitness(cyc));
            }
            continue;
        }
        path.push(w);
        collect_holes(g, path, out);
        path.pop();
    }
}

/// All induced paths from `from` to `to` avoiding the `banned` vertices.
fn induced_paths(g: &Graph, from: Vertex, to: Vertex, banned: &[Vertex]) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, path: &mut Vec<Vertex>, to: Vertex, banned: &[Vertex], out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if path.contains(&w) || banned.contains(&w) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            path.push(w);
            if w == to {
                out.push(path.clone());
            } else {
                go(g, path, to, banned, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    if from == to {
        return out;
    }
    let mut path = vec![from];
    go(g, &mut path, to, banned, &mut out);
    out
}

/// True iff the only edge between `p \ {apex}` and `q \ {apex}` is the edge
/// joining their last vertices, and they share no vertex besides the apex.
fn pyramid_pair_ok(g: &Graph, p: &[Vertex], q: &[Vertex]) -> bool {
    let (bp, bq) = (*p.last().unwrap(), *q.last().unwrap());
    for &u in &p[1..] {
        for &v in &q[1..] {
            if u == v {
                return false;
            }
            if g.has_edge(u, v) && !(u == bp && v == bq) {
                return false;
            }
        }
    }
    g.has_edge(bp, bq)
}

/// Exhaustive pyramid search: every apex, base triangle and triple of
/// induced paths.
pub fn oracle_find_pyramid(g: &Graph) -> Option<PyramidWitness> {
    let n = g.n();
    for b1 in 0..n {
        for b2 in b1 + 1..n {
            if !g.has_edge(b1, b2) {
                continue;
            }
            for b3 in b2 + 1..n {
                if !g.has_edge(b1, b3) || !g.has_edge(b2, b3) {
                    continue;
                }
                let base = [b1, b2, b3];
                for apex in 0..n {
                    if base.contains(&apex) {
                        continue;
                    }
                    let paths: Vec<Vec<Vec<Vertex>>> = (0..3)
                        .map(|i| {
                            let banned: Vec<_> = (0..3).filter(|&j| j != i).map(|j| base[j]).collect();
                            induced_paths(g, apex, base[i], &banned)
                        })
                        .collect();
                    for p1 in &paths[0] {
                        for p2 in &paths[1] {
                            if !pyramid_pair_ok(g, p1, p2) {
                                continue;
                            }
                            for p3 in &paths[2] {
                                let long = [p1, p2, p3].iter().filter(|p| p.len() >= 3).count();
                                if long < 2 || !pyramid_pair_ok(g, p1, p3) || !pyramid_pair_ok(g, p2, p3) {
                                    continue;
                                }
                                return Some(PyramidWitness {
                                    apex,
                                    base,
                                    paths: [Path(p1.clone()), Path(p2.clone()), Path(p3.clone())],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Exhaustive jewel search over ordered 5-tuples and all simple connecting
/// paths whose interior avoids the five tuple vertices.
pub fn oracle_find_jewel(g: &Graph) -> Option<JewelWitness> {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    for v1 in 0..n {
        for v2 in 0..n {
            for v3 in 0..n {
                for v4 in 0..n {
                    for v5 in 0..n {
                        let vs = [v1, v2, v3, v4, v5];
                        if (0..5).any(|i| (i + 1..5).any(|j| vs[i] == vs[j])) {
                            continue;
                        }
                        if !(e(v1, v2) && e(v2, v3) && e(v3, v4) && e(v4, v5) && e(v5, v1)) {
                            continue;
                        }
                        if e(v1, v3) || e(v2, v4) || e(v1, v4) {
                            continue;
                        }
                        let ok = |w: Vertex| {
                            !vs.contains(&w) && !e(w, v2) && !e(w, v3) && !e(w, v5)
                        };
                        if let Some(p) = simple_path(g, v1, v4, &ok) {
                            return Some(JewelWitness { v: vs, path: Path(p) });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Depth-first search for any simple path whose interior vertices satisfy
/// `allowed`.
fn simple_path(g: &Graph, from: Vertex, to: Vertex, allowed: &dyn Fn(Vertex) -> bool) -> Option<Vec<Vertex>> {
    fn go(
        g: &Graph,
        path: &mut Vec<Vertex>,
        to: Vertex,
        allowed: &dyn Fn(Vertex) -> bool,
        seen: &mut Vec<bool>,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == to && path.len() >= 2 {
                path.push(w);
                return true;
            }
            if w == to || seen[w] || !allowed(w) {
                continue;
            }
            seen[w] = true;
            path.push(w);
            if go(g, path, to, allowed, seen) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut path = vec![from];
    go(g, &mut path, to, allowed, &mut seen).then_some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_odd_hole;

    #[test]
    fn odd_hole_examples() {
        let h = oracle_find_odd_hole(&Graph::cycle(5)).unwrap();
        assert_eq!(h.len(), 5);
        assert!(oracle_find_odd_hole(&Graph::cycle(6)).is_none());
        assert!(oracle_find_odd_hole(&Graph::complete(5)).is_none());
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(oracle_find_odd_hole(&k33).is_none());
        let p = Graph::petersen();
        let h = oracle_find_odd_hole(&p).unwrap();
        assert_eq!(h.len(), 5);
        assert!(is_odd_hole(&p, &h));
    }

    #[test]
    fn all_holes_counts() {
        assert_eq!(oracle_all_holes(&Graph::cycle(7)).len(), 1);
        // Petersen has twelve 5-cycles, all induced
        let p = Graph::petersen();
        let fives = oracle_all_holes(&p).into_iter().filter(|h| h.len() == 5).count();
        assert_eq!(fives, 12);
    }

    #[test]
    fn pyramid_examples() {
        // base 0,1,2; apex 3 adjacent to 0; paths 3-4-1 and 3-5-2
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 4), (4, 1), (3, 5), (5, 2)]).unwrap();
        let w = oracle_find_pyramid(&g).unwrap();
        assert!(crate::config::verify_pyramid(&g, &w));
        assert!(oracle_find_pyramid(&Graph::cycle(7)).is_none());
    }

    #[test]
    fn jewel_examples() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(5, 0), (5, 3)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let w = oracle_find_jewel(&g).unwrap();
        assert!(crate::config::verify_jewel(&g, &w));
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(oracle_find_jewel(&k33).is_none());
        assert!(oracle_find_jewel(&Graph::cycle(5)).is_none());
    }
}
