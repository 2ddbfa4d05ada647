use std::io::Write;
use std::process::{Command, Output, Stdio};

use oddhole::io::{encode_edgelist, encode_graph6, ResultDocument, Verdict};
use oddhole::Graph;

fn oddhole(args: &[&str], stdin: &str) -> Output {
    oddhole_env(args, stdin, &[])
}

fn oddhole_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_oddhole"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn oddhole");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn detect_exit_codes() {
    let o = oddhole(&["detect"], "Dhc\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "odd-hole-found");

    let o = oddhole(&["detect", "-"], &encode_edgelist(&Graph::cycle(6)));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "no-odd-hole");

    let o = oddhole(&["detect", "--format", "edgelist"], "3 1\n2 2\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn detect_json_reverifies() {
    let g = Graph::petersen();
    for algo in ["fast", "simple", "oracle"] {
        let o = oddhole(&["detect", "--json", "--algorithm", algo], &encode_graph6(&g));
        assert_eq!(o.status.code(), Some(1));
        let doc: ResultDocument = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert_eq!(doc.verdict, Verdict::OddHoleFound);
        assert_eq!(doc.algorithm, algo);
        assert!(doc.verify(&g));
    }
}

#[test]
fn detect_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c9.edges");
    std::fs::write(&path, encode_edgelist(&Graph::cycle(9))).unwrap();
    let o = oddhole(&["detect", "--witness", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(1));
    let line = stdout(&o);
    let mut words = line.split_whitespace();
    assert_eq!(words.next(), Some("odd-hole-found"));
    assert_eq!(words.next(), Some("hole"));
    assert_eq!(words.count(), 9);

    let missing = dir.path().join("missing");
    let o = oddhole(&["detect", missing.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stream_keeps_input_order() {
    let graphs = [Graph::cycle(5), Graph::cycle(6), Graph::cycle(7), Graph::complete(4), Graph::petersen()];
    let text: String = graphs.iter().map(|g| encode_graph6(g) + "\n").collect();
    let o = oddhole_env(&["detect", "--stdin-stream", "--json"], &text, &[("ODDHOLE_THREADS", "3")]);
    assert_eq!(o.status.code(), Some(1));
    let docs: Vec<ResultDocument> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(docs.len(), graphs.len());
    for (g, d) in graphs.iter().zip(&docs) {
        assert!(d.verify(g));
    }
    let verdicts: Vec<_> = docs.iter().map(|d| d.verdict).collect();
    use Verdict::*;
    assert_eq!(verdicts, [OddHoleFound, NoOddHole, OddHoleFound, NoOddHole, OddHoleFound]);

    // one bad line poisons the exit code but not the other results
    let o = oddhole(&["detect", "--stdin-stream"], "Dhc\n!!\nC~\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(stderr(&o).contains("graph 2"));
}

#[test]
fn edgelist_stream() {
    let text = format!("{}\n{}", encode_edgelist(&Graph::cycle(4)), encode_edgelist(&Graph::cycle(5)));
    let o = oddhole(&["detect", "--stdin-stream"], &text);
    assert_eq!(stdout(&o), "no-odd-hole\nodd-hole-found\n");
}

#[test]
fn perfect_reports_antiholes() {
    let g = Graph::cycle(7).complement();
    let o = oddhole(&["perfect", "--json"], &encode_graph6(&g));
    assert_eq!(o.status.code(), Some(1));
    let doc: ResultDocument = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc.verdict, Verdict::Imperfect);
    assert!(doc.verify(&g));
    let o = oddhole(&["perfect", "--witness"], &encode_graph6(&g));
    assert!(stdout(&o).starts_with("imperfect antihole "));

    let o = oddhole(&["perfect"], &encode_graph6(&Graph::cycle(6)));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "perfect");
}

#[test]
fn types_flag() {
    let o = oddhole(&["detect", "--types", "1,3", "--json"], "Dhc");
    let doc: ResultDocument = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc.algorithm, "types:1,3");
    let o = oddhole(&["detect", "--types", "9"], "Dhc");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn probe_reports_majors() {
    // C7 plus vertex 7 adjacent to 0,1,2,3
    let mut edges: Vec<_> = Graph::cycle(7).edges().collect();
    edges.extend([(7, 0), (7, 1), (7, 2), (7, 3)]);
    let g = Graph::from_edges(8, edges).unwrap();
    let o = oddhole(&["probe", "--hole", "0,1,2,3,4,5,6"], &encode_graph6(&g));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hole"], serde_json::json!([0, 1, 2, 3, 4, 5, 6]));
    assert_eq!(v["major"], serde_json::json!([7]));
    assert_eq!(v["clean"], false);
    assert!(v["x_gaps"]["7"].is_object());

    let o = oddhole(&["probe", "--hole", "0,1,2"], &encode_graph6(&g));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_round_trips() {
    let o = oddhole(&["gen", "connected 5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 21);

    let o = oddhole(&["gen", "petersen", "--format", "edgelist"], "");
    let g = oddhole::io::parse_edgelist(&stdout(&o)).unwrap();
    assert_eq!(g, Graph::petersen());

    let a = oddhole(&["gen", "gnp 12 0.4 seed=5"], "");
    let b = oddhole(&["gen", "gnp 12 0.4 seed=5"], "");
    assert_eq!(stdout(&a), stdout(&b));

    let o = oddhole(&["gen", "hypercube 3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = oddhole(&["bench", "n=8,10 p=0.3,0.5 seeds=2", "--out", out.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(oddhole::bench::CSV_HEADER));
    assert_eq!(lines.count(), 8);

    let o = oddhole(&["bench", "p=0.3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_thread_count() {
    let o = oddhole_env(&["detect"], "Dhc", &[("ODDHOLE_THREADS", "zero")]);
    assert_eq!(o.status.code(), Some(2));
}
