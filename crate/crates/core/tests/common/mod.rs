//! Instance generators and brute-force helpers shared by the integration
//! tests and the acceptance harness.
#![allow(dead_code)]

pub mod lemmas;

use std::collections::BTreeSet;

use oddhole::corpus::major_decorated;
use oddhole::graph::bfs_distances;
use oddhole::oracle::{oracle_find_jewel, oracle_find_pyramid};
use oddhole::probes::{c_major_vertices, x_gaps, x_heavy_edges};
use oddhole::{Graph, HoleWitness, Vertex, VertexMask};
use rand::Rng;

/// `C_k` on `0..k` plus `m` vertices with arbitrary hole neighbourhoods
/// (each hole vertex with probability `p`), joined to each other with
/// probability one half.
pub fn loose_decorated(k: usize, m: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for x in k..k + m {
        edges.extend((0..k).filter(|_| rng.gen_bool(p)).map(|c| (c, x)));
        edges.extend((k..x).filter(|_| rng.gen_bool(0.5)).map(|y| (y, x)));
    }
    Graph::from_edges(k + m, edges).unwrap()
}

/// Odd cycle plus vertices that are never major: each sees nothing, one
/// vertex, an edge, or three consecutive vertices of the cycle.
pub fn minor_decorated(k: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for x in k..k + m {
        let start = rng.gen_range(0..k);
        let span = rng.gen_range(0..=3);
        edges.extend((0..span).map(|j| ((start + j) % k, x)));
        edges.extend((k..x).filter(|_| rng.gen_bool(0.4)).map(|y| (y, x)));
    }
    Graph::from_edges(k + m, edges).unwrap()
}

/// A mix of decorated odd cycles on at most `max_n` vertices, for the
/// lemma suites.
pub fn decorated_instance(i: usize, max_n: usize, rng: &mut impl Rng) -> Graph {
    let ks: Vec<usize> = [7, 9, 11].into_iter().filter(|&k| k < max_n).collect();
    let k = ks[i % ks.len()];
    let m = rng.gen_range(1..=(max_n - k).min(3));
    match (i / ks.len()) % 3 {
        0 => major_decorated(k, m, rng),
        1 => loose_decorated(k, m, 0.5, rng),
        _ => minor_decorated(k, m, rng),
    }
}

pub fn pyramid_jewel_free(g: &Graph) -> bool {
    oracle_find_pyramid(g).is_none() && oracle_find_jewel(g).is_none()
}

/// Every induced path from `x` to `y` whose interior lies in `allowed`.
pub fn induced_paths(g: &Graph, x: Vertex, y: Vertex, allowed: &VertexMask) -> Vec<Vec<Vertex>> {
    fn extend(g: &Graph, y: Vertex, allowed: &VertexMask, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let end = *path.last().unwrap();
        for &w in g.neighbors(end) {
            if path.contains(&w) || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            if w == y {
                path.push(w);
                out.push(path.clone());
                path.pop();
            } else if allowed.contains(w) {
                path.push(w);
                extend(g, y, allowed, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(g, y, allowed, &mut vec![x], &mut out);
    out
}

/// Every shortest path from `u` to `v`.
pub fn all_shortest_paths(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    let from_v = bfs_distances(g, &g.all(), v);
    let Some(d) = from_v.get(u) else { return Vec::new() };
    let mut out = Vec::new();
    let mut stack = vec![vec![u]];
    while let Some(p) = stack.pop() {
        let end = *p.last().unwrap();
        if end == v {
            out.push(p);
            continue;
        }
        let left = d - (p.len() - 1);
        for &w in g.neighbors(end) {
            if from_v.get(w) == Some(left - 1) {
                let mut q = p.clone();
                q.push(w);
                stack.push(q);
            }
        }
    }
    out
}

/// The types (1 to 6) a shortest odd hole `c` can be presented as: pick an
/// x-gap of maximum length over all majors `x` whose other majors are all
/// either complete to its ends or touch its interior, then look at where an
/// X-heavy edge sits relative to the gap.
pub fn hole_types(g: &Graph, c: &HoleWitness) -> BTreeSet<u8> {
    let k = c.len();
    let majors = c_major_vertices(g, c).to_vec();
    let longest = majors
        .iter()
        .flat_map(|&x| x_gaps(g, c, x).gaps)
        .map(|gap| gap.length)
        .max()
        .unwrap_or(0);
    let mut out = BTreeSet::new();
    if longest < 3 {
        return out;
    }
    for &x in &majors {
        for gap in x_gaps(g, c, x).gaps.into_iter().filter(|gap| gap.length == longest) {
            let dv = gap.path.vertices();
            let (d1, d2) = (dv[0], dv[dv.len() - 1]);
            let interior = &dv[1..dv.len() - 1];
            let dominated = majors
                .iter()
                .all(|&y| y == x || (g.has_edge(y, d1) && g.has_edge(y, d2)) || interior.iter().any(|&i| g.has_edge(y, i)));
            if !dominated {
                continue;
            }
            let mut xs: Vec<Vertex> = majors.iter().copied().filter(|&y| y != x && !g.has_edge(x, y)).collect();
            xs.push(x);
            let long = 2 * longest > k;
            for (u, v) in x_heavy_edges(g, c, &VertexMask::from_vertices(g.n(), xs)) {
                for (c2, c3) in [(u, v), (v, u)] {
                    let ends = [d1, d2];
                    if ends.contains(&c3) {
                        continue;
                    }
                    if !ends.contains(&c2) {
                        if !interior.contains(&c2) && !interior.contains(&c3) {
                            out.insert(if long { 2 } else { 1 });
                        }
                    } else {
                        out.insert(match (interior.contains(&c3), long) {
                            (false, false) => 3,
                            (false, true) => 4,
                            (true, false) => 5,
                            (true, true) => 6,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Pyramid-free, jewel-free graphs without 5-holes whose shortest odd holes
/// have at least one type, paired with the union of those types. Drawn from
/// `tries` decorated cycles of length 7, 9 and 11.
pub fn typed_instances(tries: usize, seed: u64) -> Vec<(Graph, BTreeSet<u8>)> {
    use oddhole::config::{find_jewel, find_pyramid};
    use oddhole::oracle::oracle_shortest_odd_holes;
    use rayon::prelude::*;
    (0..tries)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = oddhole::corpus::rng(seed.wrapping_mul(7_919).wrapping_add(i as u64));
            let k = [7, 9, 11][i % 3];
            let m = rng.gen_range(1..=3);
            let g = major_decorated(k, m, &mut rng);
            if find_pyramid(&g).is_some() || find_jewel(&g).is_some() {
                return None;
            }
            let holes = oracle_shortest_odd_holes(&g);
            if holes.first().is_none_or(|c| c.len() == 5) {
                return None;
            }
            let types: BTreeSet<u8> = holes.iter().flat_map(|c| hole_types(&g, c)).collect();
            (!types.is_empty()).then_some((g, types))
        })
        .collect()
}
