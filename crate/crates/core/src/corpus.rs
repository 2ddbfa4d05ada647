//! Graph families for testing and benchmarking, described by short spec
//! strings such as `cycle 7`, `gnp 10 0.3 seed=1` or `connected 6`.
//!
//! | spec | graphs |
//! |------|--------|
//! | `cycle k` | `C_k` |
//! | `path k` | `P_k` on `k` vertices |
//! | `complete k` | `K_k` |
//! | `petersen` | the Petersen graph |
//! | `gnp n p` | `G(n, p)` |
//! | `bipartite a b p` | random bipartite graph with sides `a`, `b` |
//! | `multipartite s1,s2,..` | complete multipartite graph |
//! | `chordal n` | random chordal graph, built by adding simplicial vertices |
//! | `major k m` | `C_k` plus `m` vertices, each with at least four hole neighbours |
//! | `all n` | every graph on `n` vertices up to isomorphism |
//! | `connected n` | every connected graph on `n` vertices up to isomorphism |
//!
//! Random families accept `seed=S` (default 0) and `count=N` (default 1);
//! copy `i` uses seed `S + i`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, HoleWitness, Vertex, VertexMask};
use crate::io::{Format, GraphDocument};
use crate::probes::is_normal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad corpus spec {spec:?}: {msg}")]
pub struct CorpusError {
    pub spec: String,
    pub msg: String,
}

/// Largest `n` accepted by `all` and `connected`.
pub const MAX_EXHAUSTIVE_N: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}

pub fn random_bipartite(a: usize, b: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges).expect("simple by construction")
}

pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    let n = part.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| part[u] != part[v]);
    Graph::from_edges(n, edges).expect("simple by construction")
}

/// Each new vertex is joined to a random clique of the graph so far, so it
/// is simplicial when added and the result is chordal.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let mut order: Vec<Vertex> = (0..v).collect();
        order.shuffle(rng);
        let mut clique: Vec<Vertex> = Vec::new();
        for u in order {
            if clique.iter().all(|&c| adj[c][u]) && rng.gen_bool(0.6) {
                clique.push(u);
            }
        }
        for u in clique {
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}

/// A random set of at least four positions on `C_k` all of whose gaps are
/// even.
fn normal_attachment(k: usize, rng: &mut impl Rng) -> Vec<Vertex> {
    let hole = HoleWitness((0..k).collect());
    loop {
        let s: Vec<Vertex> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
        if s.len() >= 4 && is_normal(&hole, &VertexMask::from_vertices(k, s.iter().copied())) {
            return s;
        }
    }
}

/// `C_k` on vertices `0..k` plus `m` decoration vertices. Each decoration
/// sees a normal set of at least four hole vertices, so it is major, and
/// decorations are joined to each other with probability one half.
pub fn major_decorated(k: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for x in k..k + m {
        edges.extend(normal_attachment(k, rng).into_iter().map(|c| (c, x)));
        for y in k..x {
            if rng.gen_bool(0.5) {
                edges.push((y, x));
            }
        }
    }
    Graph::from_edges(k + m, edges).expect("simple by construction")
}

// ---------------------------------------------------------------------------
// exhaustive enumeration

/// Canonical form: the lexicographically largest upper-triangle bit string
/// over all orderings compatible with an iterated degree refinement.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    // colour refinement with canonical colour names
    let mut colour: Vec<usize> = vec![0; n];
    loop {
        let mut sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut keys = sig.clone();
        keys.sort();
        keys.dedup();
        let next: Vec<usize> = sig.iter_mut().map(|s| keys.binary_search(s).unwrap()).collect();
        let stable = keys.len() == colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        if stable {
            break;
        }
    }
    let ncol = colour.iter().max().map_or(0, |&c| c + 1);
    let cells: Vec<Vec<Vertex>> = (0..ncol).map(|c| (0..n).filter(|&v| colour[v] == c).collect()).collect();
    let mut best: Option<Vec<bool>> = None;
    let mut order = Vec::with_capacity(n);
    permute_cells(g, &cells, 0, &mut order, &mut best);
    best.unwrap_or_default()
}

fn permute_cells(g: &Graph, cells: &[Vec<Vertex>], i: usize, order: &mut Vec<Vertex>, best: &mut Option<Vec<bool>>) {
    if i == cells.len() {
        let n = order.len();
        let bits: Vec<bool> =
            (1..n).flat_map(|j| (0..j).map(move |k| (k, j))).map(|(k, j)| g.has_edge(order[k], order[j])).collect();
        if best.as_ref().is_none_or(|b| bits > *b) {
            *best = Some(bits);
        }
        return;
    }
    let mut cell = cells[i].clone();
    heap_permutations(&mut cell, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(g, cells, i + 1, order, best);
        order.truncate(len);
    });
}

fn heap_permutations(a: &mut [Vertex], f: &mut dyn FnMut(&[Vertex])) {
    fn go(k: usize, a: &mut [Vertex], f: &mut dyn FnMut(&[Vertex])) {
        if k <= 1 {
            f(a);
            return;
        }
        go(k - 1, a, f);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            go(k - 1, a, f);
        }
    }
    let k = a.len();
    go(k, a, f);
}

fn from_canonical(n: usize, bits: &[bool]) -> Graph {
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).expect("simple")
}

/// Every graph on `n` vertices, one per isomorphism class, in a fixed order.
///
/// Graphs on `n` vertices are obtained by adding a vertex to those on
/// `n - 1` in every possible way and keeping one representative per
/// canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<(Vertex, Vertex)> = g.edges().collect();
            for subset in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&i| subset >> i & 1 == 1).map(|i| (i, k - 1)));
                let h = Graph::from_edges(k, edges).expect("simple");
                let cf = canonical_form(&h);
                if seen.insert(cf.clone()) {
                    next.push(from_canonical(k, &cf));
                }
            }
        }
        level = next;
    }
    level
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || crate::graph::bfs_distances(g, &g.all(), 0).as_options().iter().all(Option::is_some)
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_connected).collect()
}

// ---------------------------------------------------------------------------
// spec parsing

struct Spec<'a> {
    raw: &'a str,
    family: &'a str,
    args: Vec<&'a str>,
    seed: u64,
    count: usize,
}

impl<'a> Spec<'a> {
    fn parse(raw: &'a str) -> Result<Self, CorpusError> {
        let mut toks = raw.split_whitespace();
        let family = toks.next().ok_or_else(|| err(raw, "empty spec"))?;
        let mut spec = Spec { raw, family, args: Vec::new(), seed: 0, count: 1 };
        for t in toks {
            if let Some(v) = t.strip_prefix("seed=") {
                spec.seed = v.parse().map_err(|_| err(raw, "seed must be an integer"))?;
            } else if let Some(v) = t.strip_prefix("count=") {
                spec.count = v.parse().map_err(|_| err(raw, "count must be an integer"))?;
            } else {
                spec.args.push(t);
            }
        }
        Ok(spec)
    }

    fn want(&self, k: usize) -> Result<(), CorpusError> {
        if self.args.len() == k {
            Ok(())
        } else {
            Err(err(self.raw, &format!("{} takes {k} positional argument(s)", self.family)))
        }
    }

    fn int(&self, i: usize) -> Result<usize, CorpusError> {
        self.args[i].parse().map_err(|_| err(self.raw, &format!("{:?} is not an integer", self.args[i])))
    }

    fn prob(&self, i: usize) -> Result<f64, CorpusError> {
        match self.args[i].parse::<f64>() {
            Ok(p) if (0.0..=1.0).contains(&p) => Ok(p),
            _ => Err(err(self.raw, &format!("{:?} is not a probability", self.args[i]))),
        }
    }

    fn random(&self, mut make: impl FnMut(&mut ChaCha8Rng) -> Graph) -> Vec<GraphDocument> {
        (0..self.count)
            .map(|i| {
                let seed = self.seed + i as u64;
                let g = make(&mut rng(seed));
                GraphDocument::new(g, Format::Graph6).named(format!("{} seed={seed}", self.base_name()))
            })
            .collect()
    }

    fn base_name(&self) -> String {
        std::iter::once(self.family).chain(self.args.iter().copied()).collect::<Vec<_>>().join(" ")
    }
}

fn err(spec: &str, msg: &str) -> CorpusError {
    CorpusError { spec: spec.to_string(), msg: msg.to_string() }
}

/// Expands a spec string into graph documents.
pub fn generate_corpus(spec: &str) -> Result<Vec<GraphDocument>, CorpusError> {
    let s = Spec::parse(spec)?;
    let single = |g: Graph| vec![GraphDocument::new(g, Format::Graph6).named(s.base_name())];
    Ok(match s.family {
        "cycle" => {
            s.want(1)?;
            let k = s.int(0)?;
            if k < 3 {
                return Err(err(spec, "a cycle needs at least 3 vertices"));
            }
            single(Graph::cycle(k))
        }
        "path" => {
            s.want(1)?;
            single(Graph::path(s.int(0)?))
        }
        "complete" => {
            s.want(1)?;
            single(Graph::complete(s.int(0)?))
        }
        "petersen" => {
            s.want(0)?;
            single(Graph::petersen())
        }
        "gnp" => {
            s.want(2)?;
            let (n, p) = (s.int(0)?, s.prob(1)?);
            s.random(|r| gnp(n, p, r))
        }
        "bipartite" => {
            s.want(3)?;
            let (a, b, p) = (s.int(0)?, s.int(1)?, s.prob(2)?);
            s.random(|r| random_bipartite(a, b, p, r))
        }
        "multipartite" => {
            s.want(1)?;
            let sizes: Result<Vec<usize>, _> = s.args[0].split(',').map(str::parse).collect();
            let sizes = sizes.map_err(|_| err(spec, "part sizes must be comma-separated integers"))?;
            single(complete_multipartite(&sizes))
        }
        "chordal" => {
            s.want(1)?;
            let n = s.int(0)?;
            s.random(|r| random_chordal(n, r))
        }
        "major" => {
            s.want(2)?;
            let (k, m) = (s.int(0)?, s.int(1)?);
            if k < 7 || k % 2 == 0 {
                return Err(err(spec, "the base cycle must be odd with at least 7 vertices"));
            }
            s.random(|r| major_decorated(k, m, r))
        }
        "all" | "connected" => {
            s.want(1)?;
            let n = s.int(0)?;
            if n > MAX_EXHAUSTIVE_N {
                return Err(err(spec, &format!("exhaustive families stop at n = {MAX_EXHAUSTIVE_N}")));
            }
            let gs = if s.family == "all" { all_graphs(n) } else { connected_graphs(n) };
            gs.into_iter()
                .enumerate()
                .map(|(i, g)| GraphDocument::new(g, Format::Graph6).named(format!("{} #{i}", s.base_name())))
                .collect()
        }
        other => return Err(err(spec, &format!("unknown family {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::petersen();
        let mut perm: Vec<Vertex> = (0..10).collect();
        perm.shuffle(&mut rng(3));
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        assert_ne!(canonical_form(&Graph::cycle(6)), canonical_form(&complete_multipartite(&[3, 3])));
    }

    #[test]
    fn spec_examples() {
        let d = generate_corpus("cycle 7").unwrap();
        assert_eq!(d[0].graph, Graph::cycle(7));
        let a = generate_corpus("gnp 10 0.3 seed=1").unwrap();
        let b = generate_corpus("gnp 10 0.3 seed=1").unwrap();
        assert_eq!(a, b);
        assert_eq!(generate_corpus("gnp 10 0.3 seed=1 count=5").unwrap().len(), 5);
        assert_eq!(generate_corpus("multipartite 2,3").unwrap()[0].graph.edge_count(), 6);
        assert!(generate_corpus("cycle").is_err());
        assert!(generate_corpus("gnp 10 1.5").is_err());
        assert!(generate_corpus("hypercube 3").is_err());
        assert!(generate_corpus("major 8 2").is_err());
    }

    #[test]
    fn chordal_has_no_long_holes() {
        for seed in 0..20 {
            let g = random_chordal(9, &mut rng(seed));
            assert!(crate::oracle::oracle_all_holes(&g).is_empty());
        }
    }
}
