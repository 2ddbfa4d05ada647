//! Clean shortest odd holes, the heavy-cleanable sweep and candidate
//! classification.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{find_jewel, find_pyramid, odd_hole_from_jewel, odd_hole_from_pyramid};
use crate::graph::{bfs_distances, is_odd_hole, Graph, HoleWitness, Path, Vertex, VertexMask};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CleanTestResult {
    OddHoleFound(HoleWitness),
    NoCleanShortestOddHole,
}

impl CleanTestResult {
    pub fn hole(self) -> Option<HoleWitness> {
        match self {
            CleanTestResult::OddHoleFound(h) => Some(h),
            CleanTestResult::NoCleanShortestOddHole => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CandidateResult {
    OddHoleFound(HoleWitness),
    IsCandidate,
}

/// Deterministic shortest paths between every ordered pair `u < v` of
/// vertices inside a mask.
struct PairPaths {
    n: usize,
    paths: Vec<Option<Path>>,
}

impl PairPaths {
    fn new(g: &Graph, mask: &VertexMask) -> Self {
        let n = g.n();
        let mut paths = vec![None; n * n];
        for u in mask.iter() {
            let d = bfs_distances(g, mask, u);
            for v in mask.iter().filter(|&v| v > u) {
                paths[u * n + v] = d.path_to(g, v);
            }
        }
        PairPaths { n, paths }
    }

    fn get(&self, u: Vertex, v: Vertex) -> Option<&Path> {
        debug_assert!(u < v);
        self.paths[u * self.n + v].as_ref()
    }
}

/// Looks for a clean shortest odd hole of `G[mask]`.
///
/// Every triple `y1 < y2 < y3` is tried: the three deterministic shortest
/// paths between them are glued into a closed walk, and the walk is reported
/// if it is an odd hole. A clean shortest odd hole is always rebuilt from
/// three roughly evenly spaced vertices, since each arc between them is then
/// a shortest path. Reported holes are verified, so a graph that breaks the
/// pyramid/jewel precondition can only cost a missed hole.
pub fn test_clean(g: &Graph, mask: &VertexMask) -> CleanTestResult {
    if mask.len() < 5 {
        return CleanTestResult::NoCleanShortestOddHole;
    }
    let pp = PairPaths::new(g, mask);
    let vs = mask.to_vec();
    let found = (0..vs.len()).into_par_iter().find_map_first(|i| {
        let y1 = vs[i];
        for (j, &y2) in vs.iter().enumerate().skip(i + 1) {
            let Some(p12) = pp.get(y1, y2) else { continue };
            for &y3 in &vs[j + 1..] {
                let (Some(p23), Some(p13)) = (pp.get(y2, y3), pp.get(y1, y3)) else { continue };
                let total = p12.len() + p23.len() + p13.len();
                if total < 5 || total % 2 == 0 {
                    continue;
                }
                // y1 -> y2 -> y3 -> back to y1
                let mut cyc = Vec::with_capacity(total);
                cyc.extend_from_slice(p12.vertices());
                cyc.extend_from_slice(&p23.vertices()[1..]);
                let back = p13.vertices();
                cyc.extend(back[1..back.len() - 1].iter().rev());
                let w = HoleWitness(cyc);
                if is_odd_hole(g, &w) {
                    return Some(w);
                }
            }
        }
        None
    });
    match found {
        Some(w) => CleanTestResult::OddHoleFound(w),
        None => CleanTestResult::NoCleanShortestOddHole,
    }
}

/// All induced paths `c1-c2-c3-c4`, each listed in both directions.
pub fn induced_p4s(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for c2 in 0..g.n() {
        for &c3 in g.neighbors(c2) {
            for &c1 in g.neighbors(c2) {
                if c1 == c3 || g.has_edge(c1, c3) {
                    continue;
                }
                for &c4 in g.neighbors(c3) {
                    if c4 == c2 || c4 == c1 || g.has_edge(c4, c2) || g.has_edge(c4, c1) {
                        continue;
                    }
                    out.push([c1, c2, c3, c4]);
                }
            }
        }
    }
    out
}

/// The deletion set used for one P4: everything off the path that sees the
/// middle edge.
fn heavy_deletion(g: &Graph, p: &[Vertex; 4]) -> FixedBitSet {
    let mut x = g.neighbor_set(p[1]).clone();
    x.union_with(g.neighbor_set(p[2]));
    for &c in p {
        x.set(c, false);
    }
    x
}

/// Runs [`test_clean`] on `G \ X` for every induced P4, where `X` holds the
/// vertices off the P4 adjacent to its middle edge. A negative answer means
/// no heavy-cleanable shortest odd hole, provided `g` has no pyramid or
/// jewel.
pub fn test_heavy_cleanable(g: &Graph) -> CleanTestResult {
    let mut seen = HashSet::new();
    let masks: Vec<VertexMask> = induced_p4s(g)
        .iter()
        .filter_map(|p| {
            let x = heavy_deletion(g, p);
            if !seen.insert(x.clone()) {
                return None;
            }
            let mut m = g.all();
            m.remove_all(&x);
            Some(m)
        })
        .collect();
    let found = masks.par_iter().find_map_first(|m| test_clean(g, m).hole());
    match found {
        Some(w) => CleanTestResult::OddHoleFound(w),
        None => CleanTestResult::NoCleanShortestOddHole,
    }
}

/// Jewel, then pyramid, then the heavy-cleanable sweep.
pub fn classify_candidate(g: &Graph) -> CandidateResult {
    if let Some(j) = find_jewel(g) {
        return CandidateResult::OddHoleFound(odd_hole_from_jewel(g, &j));
    }
    if let Some(p) = find_pyramid(g) {
        return CandidateResult::OddHoleFound(odd_hole_from_pyramid(g, &p));
    }
    match test_heavy_cleanable(g) {
        CleanTestResult::OddHoleFound(w) => CandidateResult::OddHoleFound(w),
        CleanTestResult::NoCleanShortestOddHole => CandidateResult::IsCandidate,
    }
}
