//! Executable checks of the structural lemmas about shortest odd holes.
//!
//! Each suite draws decorated odd cycles, keeps the graphs that satisfy the
//! lemma's hypotheses (checked with the brute-force oracles), and counts the
//! instances that actually exercised the conclusion.
//!
//! Two lemmas are stated for candidates. Small candidates never contain an
//! odd hole, so those suites use the hypotheses their proofs rely on
//! instead: no pyramid, no jewel, no 5-hole. Every candidate satisfies
//! these, so the checks are at least as strong.

use rayon::prelude::*;

use oddhole::graph::{bfs_distances, is_odd_hole};
use oddhole::oracle::oracle_shortest_odd_holes;
use oddhole::probes::{c_major_vertices, is_clean, is_normal, x_heavy_edges};
use oddhole::{Graph, HoleWitness, Vertex, VertexMask};

use super::{all_shortest_paths, decorated_instance, induced_paths, pyramid_jewel_free};

#[derive(Debug, Default, Clone)]
pub struct LemmaReport {
    pub name: &'static str,
    /// Graphs on which the conclusion was checked at least once.
    pub instances: usize,
    pub checks: usize,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn ok(&self, min_instances: usize) -> bool {
        self.violations.is_empty() && self.instances >= min_instances
    }

    fn merge(mut self, other: LemmaReport) -> LemmaReport {
        self.instances += other.instances;
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self
    }
}

pub const MIN_INSTANCES: usize = 50;

/// Runs `check` on every shortest odd hole of every generated graph that
/// passes `keep`. `check` returns how many conclusions it tested and any
/// violation messages.
fn suite(
    name: &'static str,
    tries: usize,
    max_n: usize,
    seed: u64,
    keep: impl Fn(&Graph, &[HoleWitness]) -> bool + Sync,
    check: impl Fn(&Graph, &HoleWitness) -> (usize, Vec<String>) + Sync,
) -> LemmaReport {
    (0..tries)
        .into_par_iter()
        .map(|i| {
            let mut rng = oddhole::corpus::rng(seed.wrapping_mul(1_000_003).wrapping_add(i as u64));
            let g = decorated_instance(i, max_n, &mut rng);
            let mut r = LemmaReport { name, ..Default::default() };
            if !pyramid_jewel_free(&g) {
                return r;
            }
            let holes = oracle_shortest_odd_holes(&g);
            if holes.is_empty() || !keep(&g, &holes) {
                return r;
            }
            for c in &holes {
                let (n, v) = check(&g, c);
                r.checks += n;
                r.violations.extend(v.into_iter().map(|m| format!("{m} in {g:?}")));
            }
            r.instances = (r.checks > 0) as usize;
            r
        })
        .reduce(|| LemmaReport { name, ..Default::default() }, LemmaReport::merge)
}

fn mask(g: &Graph, vs: impl IntoIterator<Item = Vertex>) -> VertexMask {
    VertexMask::from_vertices(g.n(), vs)
}

fn subsets(items: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    (1u32..1 << items.len()).map(move |bits| {
        items.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &v)| v).collect()
    })
}

fn no_five_hole(_: &Graph, holes: &[HoleWitness]) -> bool {
    holes[0].len() > 5
}

/// The vertices of `c` adjacent to every member of a stable set of
/// `C`-majors form a normal set.
pub fn stablenbr(tries: usize) -> LemmaReport {
    suite("stablenbr", tries, 10, 1, |_, _| true, |g, c| {
        let majors = c_major_vertices(g, c).to_vec();
        let mut checks = 0;
        let mut bad = Vec::new();
        for x in subsets(&majors) {
            if x.iter().any(|&a| x.iter().any(|&b| g.has_edge(a, b))) {
                continue;
            }
            let complete = mask(g, c.vertices().iter().copied().filter(|&v| x.iter().all(|&xi| g.has_edge(v, xi))));
            checks += 1;
            if !is_normal(c, &complete) {
                bad.push(format!("X = {x:?}, C = {:?}: X-complete set {:?} not normal", c.vertices(), complete.to_vec()));
            }
        }
        (checks, bad)
    })
}

/// Every `C`-major vertex has at least four neighbours on `C`.
pub fn manynbrs(tries: usize) -> LemmaReport {
    suite("manynbrs", tries, 12, 2, no_five_hole, |g, c| {
        let majors = c_major_vertices(g, c).to_vec();
        let bad = majors
            .iter()
            .filter(|&&x| c.vertices().iter().filter(|&&v| g.has_edge(x, v)).count() < 4)
            .map(|x| format!("major {x} of {:?} has fewer than four neighbours", c.vertices()))
            .collect();
        (majors.len(), bad)
    })
}

/// Induced paths between nonadjacent `C`-majors through `C` are even.
pub fn majorjump(tries: usize) -> LemmaReport {
    suite("majorjump", tries, 12, 3, no_five_hole, |g, c| {
        let majors = c_major_vertices(g, c).to_vec();
        let on_c = mask(g, c.vertices().iter().copied());
        let mut checks = 0;
        let mut bad = Vec::new();
        for (i, &x) in majors.iter().enumerate() {
            for &y in &majors[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                for p in induced_paths(g, x, y, &on_c) {
                    checks += 1;
                    if (p.len() - 1) % 2 == 1 {
                        bad.push(format!("odd path {p:?} through {:?}", c.vertices()));
                    }
                }
            }
        }
        (checks, bad)
    })
}

/// Any set of `C`-majors with a member nonadjacent to the rest has an
/// X-heavy edge on `C`.
pub fn heavyedge(tries: usize) -> LemmaReport {
    suite("heavyedge", tries, 12, 4, no_five_hole, |g, c| {
        let majors = c_major_vertices(g, c).to_vec();
        let mut checks = 0;
        let mut bad = Vec::new();
        for x in subsets(&majors) {
            let has_loner = x.iter().any(|&x0| x.iter().all(|&o| o == x0 || !g.has_edge(x0, o)));
            if !has_loner {
                continue;
            }
            checks += 1;
            if x_heavy_edges(g, c, &mask(g, x.iter().copied())).is_empty() {
                bad.push(format!("X = {x:?} has no heavy edge on {:?}", c.vertices()));
            }
        }
        (checks, bad)
    })
}

/// For a clean shortest odd hole, the short arc between nonadjacent hole
/// vertices is a shortest path, and every shortest path closes up with the
/// long arc into a shortest odd hole.
pub fn shortpath(tries: usize) -> LemmaReport {
    suite("shortpath", tries, 11, 5, |_, _| true, |g, c| {
        if !is_clean(g, c) {
            return (0, Vec::new());
        }
        let k = c.len();
        let vs = c.vertices();
        let mut checks = 0;
        let mut bad = Vec::new();
        for i in 0..k {
            let dist = bfs_distances(g, &g.all(), vs[i]);
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (u, v) = (vs[i], vs[j]);
                let short = (j - i).min(k - (j - i));
                checks += 1;
                if dist.get(v) != Some(short) {
                    bad.push(format!("dist({u},{v}) = {:?}, arc {short} on {vs:?}", dist.get(v)));
                    continue;
                }
                // the long arc from v back round to u, without its ends
                let long_interior: Vec<Vertex> = if j - i < k - (j - i) {
                    (1..k - (j - i)).map(|s| vs[(j + s) % k]).collect()
                } else {
                    (1..j - i).map(|s| vs[i + s]).collect()
                };
                let (from, to) = if j - i < k - (j - i) { (u, v) } else { (v, u) };
                for p in all_shortest_paths(g, from, to) {
                    let mut cycle = p.clone();
                    cycle.extend(&long_interior);
                    let w = HoleWitness(cycle);
                    if !is_odd_hole(g, &w) || w.len() != k {
                        bad.push(format!("{p:?} with long arc of {vs:?} is not a shortest odd hole"));
                    }
                }
            }
        }
        (checks, bad)
    })
}

pub fn all_suites(tries: usize) -> Vec<LemmaReport> {
    vec![stablenbr(tries), manynbrs(tries), majorjump(tries), heavyedge(tries), shortpath(tries)]
}
