//! graph6 and edge-list formats, and the JSON result document.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{is_odd_hole, Graph, GraphError, HoleWitness, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            _ => Err(format!("unknown format {s:?} (expected graph6 or edgelist)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6, byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

/// A graph together with the format it came from and optional labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub format: Format,
    pub name: Option<String>,
    pub comment: Option<String>,
}

impl GraphDocument {
    pub fn new(graph: Graph, format: Format) -> Self {
        GraphDocument { graph, format, name: None, comment: None }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Serializes in the document's own format.
    pub fn encode(&self) -> String {
        match self.format {
            Format::Graph6 => encode_graph6(&self.graph),
            Format::Edgelist => encode_edgelist(&self.graph),
        }
    }
}

// ---------------------------------------------------------------------------
// graph6

const G6_HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let (s, base) = match s.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, G6_HEADER.len()),
        None => (s, 0),
    };
    let bytes = s.as_bytes();
    let err = |offset: usize, msg: &str| ParseError::Graph6 { offset: base + offset, msg: msg.to_string() };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes.get(i).map(|&b| (b - 63) as usize).ok_or_else(|| err(i, "truncated size field"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() != pos + need {
        return Err(err(bytes.len().min(pos + need), &format!("expected {need} data bytes for n = {n}")));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + bit / 6] - 63) as usize;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if !bit.is_multiple_of(6) {
        let last = (bytes[pos + bit / 6] - 63) as usize;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(pos + bit / 6, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(Graph::from_edges(n, edges).expect("graph6 edges are simple"))
}

// ---------------------------------------------------------------------------
// edge list

pub fn encode_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and lines starting
/// with `#` are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, msg: String| ParseError::EdgeList { line, msg };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut it = l.split_whitespace();
        let mut num = |what: &str| -> Result<usize, ParseError> {
            let tok = it.next().ok_or_else(|| err(line, format!("missing {what}")))?;
            tok.parse().map_err(|_| err(line, format!("{what} {tok:?} is not a nonnegative integer")))
        };
        let a = num("first field")?;
        let b = num("second field")?;
        if let Some(extra) = it.next() {
            return Err(err(line, format!("unexpected trailing field {extra:?}")));
        }
        Ok((a, b))
    };
    let Some((hl, header)) = lines.next() else {
        return Err(err(1, "missing `n m` header".into()));
    };
    let (n, m) = pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = hl;
    for (line, l) in lines {
        if edges.len() == m {
            return Err(err(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = pair(line, l)?;
        let bad = if u >= n || v >= n {
            Some(GraphError::VertexOutOfRange { vertex: u.max(v), n })
        } else if u == v {
            Some(GraphError::Loop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(GraphError::ParallelEdge(u, v))
        } else {
            None
        };
        if let Some(e) = bad {
            return Err(err(line, edge_error(e)));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(err(last_line, format!("header declares {m} edges but {} were given", edges.len())));
    }
    Ok(Graph::from_edges(n, edges).expect("edges checked line by line"))
}

fn edge_error(e: GraphError) -> String {
    match e {
        GraphError::VertexOutOfRange { vertex, n } => format!("vertex {vertex} out of range for n = {n}"),
        GraphError::Loop(v) => format!("loop at vertex {v}"),
        GraphError::ParallelEdge(u, v) => format!("duplicate edge {u} {v}"),
        GraphError::RepeatedVertex(v) => format!("vertex {v} repeated"),
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<GraphDocument, ParseError> {
    let graph = match format {
        Format::Graph6 => parse_graph6(text.trim())?,
        Format::Edgelist => parse_edgelist(text)?,
    };
    Ok(GraphDocument::new(graph, format))
}

/// Guesses the format: an edge list starts with two integers.
pub fn sniff_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() == 2 && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => {
            Format::Edgelist
        }
        _ => Format::Graph6,
    }
}

/// Several documents in one text: one graph6 string per line, or edge lists
/// separated by blank lines.
pub fn parse_many(text: &str, format: Format) -> Vec<Result<GraphDocument, ParseError>> {
    match format {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_graph(l, Format::Graph6))
            .collect(),
        Format::Edgelist => text
            .split("\n\n")
            .filter(|chunk| chunk.lines().any(|l| !l.trim().is_empty() && !l.trim().starts_with('#')))
            .map(|chunk| parse_graph(chunk, Format::Edgelist))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// results

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    OddHoleFound,
    NoOddHole,
    Perfect,
    Imperfect,
}

impl Verdict {
    /// Process exit code for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::NoOddHole | Verdict::Perfect => 0,
            Verdict::OddHoleFound | Verdict::Imperfect => 1,
        }
    }

    fn needs_witness(self) -> bool {
        matches!(self, Verdict::OddHoleFound | Verdict::Imperfect)
    }
}

/// Whether a witness is a hole of the graph or of its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Hole,
    Antihole,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_kind: Option<WitnessKind>,
    pub algorithm: String,
    pub elapsed_ms: f64,
    pub input_digest: String,
}

impl ResultDocument {
    /// Checks the verdict/witness pairing and re-verifies the witness
    /// against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.input_digest != input_digest(g) {
            return false;
        }
        match (&self.witness, self.verdict.needs_witness()) {
            (None, false) => self.witness_kind.is_none(),
            (Some(w), true) => {
                let w = HoleWitness(w.clone());
                match self.witness_kind.unwrap_or(WitnessKind::Hole) {
                    WitnessKind::Hole => is_odd_hole(g, &w),
                    WitnessKind::Antihole => is_odd_hole(&g.complement(), &w),
                }
            }
            _ => false,
        }
    }
}

/// `sha256:` followed by the hex digest of the graph's graph6 string.
pub fn input_digest(g: &Graph) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(encode_graph6(g).as_bytes())))
}
