//! Wall-clock measurements of detection on `G(n, p)`, written as CSV.

use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::corpus::{gnp, rng};
use crate::pipeline::Algorithm;

pub const CSV_HEADER: &str = "n,p,algorithm,seed,millis,verdict";

/// Which graphs to time: every `n` in `ns`, every `p` in `ps`, seeds
/// `0..seeds`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub ns: Vec<usize>,
    pub ps: Vec<f64>,
    pub seeds: u64,
    pub algorithm: Algorithm,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad bench spec: {0}")]
pub struct BenchSpecError(String);

impl FromStr for BenchSpec {
    type Err = BenchSpecError;

    /// `n=10,15,20 p=0.3 seeds=3 algorithm=fast`; only `n` is required.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let e = |m: &str| BenchSpecError(m.to_string());
        let mut spec = BenchSpec { ns: Vec::new(), ps: vec![0.3], seeds: 1, algorithm: Algorithm::Fast };
        for tok in s.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| e(&format!("expected key=value, got {tok:?}")))?;
            match k {
                "n" => spec.ns = v.split(',').map(str::parse).collect::<Result<_, _>>().map_err(|_| e("n"))?,
                "p" => spec.ps = v.split(',').map(str::parse).collect::<Result<_, _>>().map_err(|_| e("p"))?,
                "seeds" => spec.seeds = v.parse().map_err(|_| e("seeds"))?,
                "algorithm" => spec.algorithm = v.parse().map_err(|m: String| e(&m))?,
                _ => return Err(e(&format!("unknown key {k:?}"))),
            }
        }
        if spec.ns.is_empty() {
            return Err(e("n=... is required"));
        }
        if spec.ps.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(e("p must lie in [0, 1]"));
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub p: f64,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub millis: f64,
    pub found: bool,
}

impl BenchRow {
    pub fn verdict(&self) -> &'static str {
        if self.found {
            "odd-hole-found"
        } else {
            "no-odd-hole"
        }
    }

    pub fn csv(&self) -> String {
        format!("{},{},{},{},{:.3},{}", self.n, self.p, self.algorithm, self.seed, self.millis, self.verdict())
    }
}

/// Times every graph of the spec in order, calling `on_row` as each one
/// finishes. The graph for `(n, p, seed)` is the corpus graph
/// `gnp n p seed=seed`.
pub fn bench(spec: &BenchSpec, mut on_row: impl FnMut(&BenchRow)) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &n in &spec.ns {
        for &p in &spec.ps {
            for seed in 0..spec.seeds {
                let g = gnp(n, p, &mut rng(seed));
                let start = Instant::now();
                let found = spec.algorithm.run(&g).is_found();
                let row = BenchRow { n, p, algorithm: spec.algorithm, seed, millis: start.elapsed().as_secs_f64() * 1e3, found };
                on_row(&row);
                rows.push(row);
            }
        }
    }
    rows
}

/// Runs [`bench`] and streams CSV, header first.
pub fn bench_csv(spec: &BenchSpec, out: &mut impl Write) -> io::Result<Vec<BenchRow>> {
    writeln!(out, "{CSV_HEADER}")?;
    let mut failure = None;
    let rows = bench(spec, |r| {
        if failure.is_none() {
            if let Err(e) = writeln!(out, "{}", r.csv()).and_then(|_| out.flush()) {
                failure = Some(e);
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(rows),
    }
}
