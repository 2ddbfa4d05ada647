//! Timed detection runs that produce [`ResultDocument`]s, and the perfect
//! graph test.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::fast::{detect, detect_types, HoleType};
use crate::graph::Graph;
use crate::io::{input_digest, ResultDocument, Verdict, WitnessKind};
use crate::oracle::oracle_find_odd_hole;
use crate::simple::{detect_with_simple_pipeline, DetectionResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    #[default]
    Fast,
    Simple,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fast => "fast",
            Algorithm::Simple => "simple",
            Algorithm::Oracle => "oracle",
        }
    }

    pub fn run(self, g: &Graph) -> DetectionResult {
        match self {
            Algorithm::Fast => detect(g),
            Algorithm::Simple => detect_with_simple_pipeline(g),
            Algorithm::Oracle => DetectionResult::from_option(oracle_find_odd_hole(g)),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Algorithm::Fast),
            "simple" => Ok(Algorithm::Simple),
            "oracle" => Ok(Algorithm::Oracle),
            _ => Err(format!("unknown algorithm {s:?} (expected fast, simple or oracle)")),
        }
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn document(g: &Graph, r: DetectionResult, algorithm: String, start: Instant) -> ResultDocument {
    let (verdict, witness, witness_kind) = match r {
        DetectionResult::OddHoleFound(w) => (Verdict::OddHoleFound, Some(w.0), Some(WitnessKind::Hole)),
        DetectionResult::NoOddHole => (Verdict::NoOddHole, None, None),
    };
    ResultDocument { verdict, witness, witness_kind, algorithm, elapsed_ms: millis(start), input_digest: input_digest(g) }
}

/// Runs one algorithm and wraps the outcome.
pub fn detect_document(g: &Graph, algorithm: Algorithm) -> ResultDocument {
    let start = Instant::now();
    let r = algorithm.run(g);
    document(g, r, algorithm.name().to_string(), start)
}

/// Runs only the listed type detectors, skipping classification. Meant for
/// debugging a single detector on a candidate.
pub fn detect_types_document(g: &Graph, types: &[HoleType]) -> ResultDocument {
    let start = Instant::now();
    let r = detect_types(g, types);
    let names: Vec<String> = types.iter().map(ToString::to_string).collect();
    document(g, r, format!("types:{}", names.join(",")), start)
}

/// A graph is perfect iff neither it nor its complement has an odd hole.
/// An odd hole of the complement is reported as an antihole of `g`.
pub fn test_perfect(g: &Graph) -> ResultDocument {
    test_perfect_with(g, Algorithm::Fast)
}

pub fn test_perfect_with(g: &Graph, algorithm: Algorithm) -> ResultDocument {
    let start = Instant::now();
    let (verdict, witness, witness_kind) = match algorithm.run(g) {
        DetectionResult::OddHoleFound(w) => (Verdict::Imperfect, Some(w.0), Some(WitnessKind::Hole)),
        DetectionResult::NoOddHole => match algorithm.run(&g.complement()) {
            DetectionResult::OddHoleFound(w) => (Verdict::Imperfect, Some(w.0), Some(WitnessKind::Antihole)),
            DetectionResult::NoOddHole => (Verdict::Perfect, None, None),
        },
    };
    ResultDocument {
        verdict,
        witness,
        witness_kind,
        algorithm: algorithm.name().to_string(),
        elapsed_ms: millis(start),
        input_digest: input_digest(g),
    }
}
