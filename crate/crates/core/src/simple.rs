//! The preliminary detector: guess eight vertices of a shortest odd hole and
//! its worst major vertex, delete everything that could be major, and hand
//! the rest to the clean test.

use std::collections::HashMap;
use std::sync::Mutex;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clean::{classify_candidate, induced_p4s, test_clean, CandidateResult};
use crate::graph::{bfs_distances, union_interior_from, Graph, HoleWitness, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DetectionResult {
    OddHoleFound(HoleWitness),
    NoOddHole,
}

impl DetectionResult {
    pub fn is_found(&self) -> bool {
        matches!(self, DetectionResult::OddHoleFound(_))
    }

    pub fn witness(&self) -> Option<&HoleWitness> {
        match self {
            DetectionResult::OddHoleFound(w) => Some(w),
            DetectionResult::NoOddHole => None,
        }
    }

    pub(crate) fn from_option(w: Option<HoleWitness>) -> Self {
        w.map_or(DetectionResult::NoOddHole, DetectionResult::OddHoleFound)
    }
}

/// Induced paths `d1-x-d2` with `d1 < d2`; the roles of `d1` and `d2` are
/// symmetric in every use.
pub(crate) fn induced_p3s(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        let nb = g.neighbors(x);
        for (i, &d1) in nb.iter().enumerate() {
            for &d2 in &nb[i + 1..] {
                if !g.has_edge(d1, d2) {
                    out.push([d1.min(d2), x, d1.max(d2)]);
                }
            }
        }
    }
    out
}

/// Common neighbours of `a` and `b`.
pub(crate) fn common_neighbors(g: &Graph, a: Vertex, b: Vertex) -> FixedBitSet {
    let mut s = g.neighbor_set(a).clone();
    s.intersect_with(g.neighbor_set(b));
    s
}

/// The deletion sets `X1 ∪ X2 ∪ X3 ∪ {x}` for every `d3` completing the
/// given P4 and P3; empty when the pair fails the early checks.
fn tuple_deletion(g: &Graph, c: &[Vertex; 4], d: &[Vertex; 3], x2: &FixedBitSet) -> Vec<FixedBitSet> {
    let n = g.n();
    let [d1, x, d2] = *d;
    if c.contains(&x) {
        return Vec::new();
    }
    let mut x1 = common_neighbors(g, d1, d2);
    x1.set(x, false);
    let mut gp = g.all();
    gp.remove_all(&x1);
    gp.remove_all(x2);
    if !gp.contains(d1) || !gp.contains(d2) {
        return Vec::new();
    }
    // Y: vertices of G' other than x and not adjacent to it
    let mut y = gp.clone();
    y.remove(x);
    y.remove_all(g.neighbor_set(x));
    let mut h = y.clone();
    h.insert(d1);
    h.insert(d2);
    let t1 = bfs_distances(g, &h, d1);
    let t2 = bfs_distances(g, &h, d2);

    let mut base = x1;
    base.union_with(x2);
    base.insert(x);
    let mut out = Vec::new();
    for d3 in y.iter() {
        let (Some(a), Some(b)) = (t1.get(d3), t2.get(d3)) else { continue };
        if a != b {
            continue;
        }
        let t3 = bfs_distances(g, &h, d3);
        // F1 ∪ F2
        let mut f = union_interior_from(&t1, &t3, d1, d3, n).bits().clone();
        f.union_with(union_interior_from(&t2, &t3, d2, d3, n).bits());
        let mut reach = f.clone();
        reach.insert(d3);
        let mut x3 = FixedBitSet::with_capacity(n);
        for v in gp.iter() {
            if v == d1 || v == d2 || v == d3 || v == x || f.contains(v) {
                continue;
            }
            if !g.neighbor_set(v).is_disjoint(&reach) {
                x3.insert(v);
            }
        }
        let mut del = base.clone();
        del.union_with(&x3);
        out.push(del);
    }
    out
}

/// The preliminary detector on a candidate graph.
///
/// Each distinct deletion set is tested once; tuples are explored in a fixed
/// order so the reported witness does not depend on scheduling.
pub fn detect_simple(g: &Graph) -> DetectionResult {
    if g.n() < 5 {
        return DetectionResult::NoOddHole;
    }
    let p4s = induced_p4s(g);
    let p3s = induced_p3s(g);
    let cache: Mutex<HashMap<FixedBitSet, Option<HoleWitness>>> = Mutex::new(HashMap::new());
    let found = p4s.par_iter().find_map_first(|c| {
        let mut x2 = g.neighbor_set(c[1]).clone();
        x2.union_with(g.neighbor_set(c[2]));
        for &v in c {
            x2.set(v, false);
        }
        for d in &p3s {
            for del in tuple_deletion(g, c, d, &x2) {
                if let Some(hit) = cache.lock().unwrap().get(&del) {
                    if hit.is_some() {
                        return hit.clone();
                    }
                    continue;
                }
                let mut mask = g.all();
                mask.remove_all(&del);
                let r = test_clean(g, &mask).hole();
                cache.lock().unwrap().insert(del, r.clone());
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    });
    DetectionResult::from_option(found)
}

/// Classification followed by [`detect_simple`].
pub fn detect_with_simple_pipeline(g: &Graph) -> DetectionResult {
    match classify_candidate(g) {
        CandidateResult::OddHoleFound(w) => DetectionResult::OddHoleFound(w),
        CandidateResult::IsCandidate => detect_simple(g),
    }
}
