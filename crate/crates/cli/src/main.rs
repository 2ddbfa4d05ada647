use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use oddhole::bench::{bench_csv, BenchSpec};
use oddhole::config::{find_jewel, find_pyramid, ConfigWitness};
use oddhole::corpus::generate_corpus;
use oddhole::fast::HoleType;
use oddhole::io::{parse_graph, parse_many, sniff_format, Format, GraphDocument, ResultDocument};
use oddhole::pipeline::{detect_document, detect_types_document, test_perfect_with, Algorithm};
use oddhole::probes::{c_major_vertices, is_clean, x_gaps, x_heavy_edges};
use oddhole::{detect, Graph, HoleWitness};

/// Exit status for unreadable or malformed input.
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "oddhole", version, about = "Odd hole detection and perfect graph testing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph has an odd hole.
    Detect(DetectArgs),
    /// Decide whether a graph is perfect (no odd hole, no odd antihole).
    Perfect(PerfectArgs),
    /// Dump major vertices, gaps and heavy edges of a hole as JSON.
    Probe(ProbeArgs),
    /// Write the graphs of a corpus spec such as `gnp 10 0.3 seed=1`.
    Gen(GenArgs),
    /// Time detection on random graphs and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
    /// Input format; guessed from the content when omitted.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Args)]
struct DetectArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "fast")]
    algorithm: Algorithm,
    /// Print the witness hole.
    #[arg(long)]
    witness: bool,
    /// Print the JSON result document.
    #[arg(long)]
    json: bool,
    /// Run only these type detectors (e.g. `1,3`), without classification.
    #[arg(long, value_delimiter = ',')]
    types: Vec<HoleType>,
    /// Treat the input as many graphs: one graph6 string per line, or edge
    /// lists separated by blank lines.
    #[arg(long)]
    stdin_stream: bool,
}

#[derive(Args)]
struct PerfectArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "fast")]
    algorithm: Algorithm,
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProbeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Hole to probe, as comma-separated vertices; defaults to the hole
    /// found by detection.
    #[arg(long, value_delimiter = ',')]
    hole: Vec<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// Corpus spec, e.g. `cycle 7` or `connected 5`.
    spec: String,
    #[arg(long, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// e.g. `n=10,15,20 p=0.3 seeds=3 algorithm=fast`
    spec: String,
    /// Write CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Errors the user can fix by changing the input; these exit with status 2.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn input_error(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

fn read_text(input: &InputArgs) -> Result<String> {
    match input.file.as_deref() {
        None => read_stdin(),
        Some(p) if p.as_os_str() == "-" => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| input_error(format!("cannot read {}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|e| input_error(format!("cannot read standard input: {e}")))?;
    Ok(s)
}

fn read_graph(input: &InputArgs) -> Result<GraphDocument> {
    let text = read_text(input)?;
    let format = input.format.unwrap_or_else(|| sniff_format(&text));
    parse_graph(&text, format).map_err(|e| input_error(e.to_string()))
}

fn print_result(doc: &ResultDocument, json: bool, witness: bool) -> Result<()> {
    let mut out = io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string(doc)?)?;
        return Ok(());
    }
    let verdict = serde_json::to_value(doc.verdict)?;
    let verdict = verdict.as_str().unwrap_or_default();
    match (&doc.witness, witness) {
        (Some(w), true) => {
            let kind = doc.witness_kind.map(|k| serde_json::to_value(k).unwrap()).unwrap_or_default();
            let vs: Vec<String> = w.iter().map(ToString::to_string).collect();
            writeln!(out, "{verdict} {} {}", kind.as_str().unwrap_or("hole"), vs.join(" "))?;
        }
        _ => writeln!(out, "{verdict}")?,
    }
    Ok(())
}

fn run_detect(args: &DetectArgs, g: &Graph) -> ResultDocument {
    if args.types.is_empty() {
        detect_document(g, args.algorithm)
    } else {
        detect_types_document(g, &args.types)
    }
}

fn cmd_detect(args: DetectArgs) -> Result<u8> {
    if !args.stdin_stream {
        let doc = read_graph(&args.input)?;
        let r = run_detect(&args, &doc.graph);
        print_result(&r, args.json, args.witness)?;
        return Ok(r.verdict.exit_code() as u8);
    }
    let text = read_text(&args.input)?;
    let format = args.input.format.unwrap_or_else(|| sniff_format(&text));
    let docs = parse_many(&text, format);
    let results: Vec<Result<ResultDocument, String>> = docs
        .into_par_iter()
        .map(|d| d.map(|d| run_detect(&args, &d.graph)).map_err(|e| e.to_string()))
        .collect();
    let mut code = 0;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(doc) => {
                print_result(doc, args.json, args.witness)?;
                code = code.max(doc.verdict.exit_code() as u8);
            }
            Err(e) => {
                eprintln!("graph {}: {e}", i + 1);
                code = INPUT_ERROR;
            }
        }
    }
    Ok(code)
}

fn cmd_perfect(args: PerfectArgs) -> Result<u8> {
    let doc = read_graph(&args.input)?;
    let r = test_perfect_with(&doc.graph, args.algorithm);
    print_result(&r, args.json, args.witness)?;
    Ok(r.verdict.exit_code() as u8)
}

fn cmd_probe(args: ProbeArgs) -> Result<u8> {
    let doc = read_graph(&args.input)?;
    let g = &doc.graph;
    let hole = if args.hole.is_empty() {
        detect(g).witness().cloned()
    } else {
        let h = HoleWitness(args.hole.clone());
        if !oddhole::graph::is_hole(g, h.vertices()) {
            return Err(input_error(format!("{:?} is not a hole of the graph", args.hole)));
        }
        Some(h)
    };
    let config = find_pyramid(g).map(ConfigWitness::Pyramid).or_else(|| find_jewel(g).map(ConfigWitness::Jewel));
    let mut report = json!({ "n": g.n(), "m": g.edge_count(), "configuration": config });
    if let Some(h) = hole {
        let majors = c_major_vertices(g, &h);
        let gaps: serde_json::Map<String, serde_json::Value> =
            majors.iter().map(|x| (x.to_string(), serde_json::to_value(x_gaps(g, &h, x)).unwrap())).collect();
        report["hole"] = json!(h);
        report["major"] = json!(majors.to_vec());
        report["clean"] = json!(is_clean(g, &h));
        report["x_gaps"] = json!(gaps);
        report["heavy_edges"] = json!(x_heavy_edges(g, &h, &majors));
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let docs = generate_corpus(&args.spec).map_err(|e| input_error(e.to_string()))?;
    let mut out = io::stdout().lock();
    for (i, d) in docs.iter().enumerate() {
        match args.format {
            Format::Graph6 => writeln!(out, "{}", oddhole::io::encode_graph6(&d.graph))?,
            Format::Edgelist => {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", oddhole::io::encode_edgelist(&d.graph))?;
            }
        }
    }
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> Result<u8> {
    let spec: BenchSpec = args.spec.parse().map_err(|e: oddhole::bench::BenchSpecError| input_error(e.to_string()))?;
    match args.out {
        Some(p) => {
            let mut f = io::BufWriter::new(fs::File::create(&p).with_context(|| format!("creating {}", p.display()))?);
            bench_csv(&spec, &mut f)?;
        }
        None => {
            bench_csv(&spec, &mut io::stdout().lock())?;
        }
    }
    Ok(0)
}

fn init_threads() -> Result<()> {
    let Ok(v) = std::env::var("ODDHOLE_THREADS") else { return Ok(()) };
    let n: usize = match v.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => bail!(InputError(format!("ODDHOLE_THREADS must be a positive integer, got {v:?}"))),
    };
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    init_threads()?;
    match cli.command {
        Command::Detect(a) => cmd_detect(a),
        Command::Perfect(a) => cmd_perfect(a),
        Command::Probe(a) => cmd_probe(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
