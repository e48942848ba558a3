use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use longpath::documents::BlueprintDocument;
use longpath::format::GraphFile;
use longpath::suites::{audit, read_log};
use longpath::witness::WitnessDocument;
use serde_json::Value;
use tempfile::TempDir;

fn longpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_longpath")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// s -> a -> t and s -> b1 -> b2 -> b3 -> b4 -> t with s = 1, t = 7.
const TWO_PARALLEL: &str = "c two parallel paths\np dg 7 7\na 1 2\na 2 7\na 1 3\na 3 4\na 4 5\na 5 6\na 6 7\n";

fn cycle_ug(n: usize) -> String {
    let mut text = format!("p ug {n} {n}\n");
    for v in 1..=n {
        text += &format!("e {v} {}\n", v % n + 1);
    }
    text
}

fn detour(file: &Path, source: &str, target: &str, k: &str, extra: &[&str]) -> Output {
    let mut args = vec!["detour", "--graph", s(file), "--source", source, "--target", target, "--k", k];
    args.extend_from_slice(extra);
    longpath(&args)
}

#[test]
fn detour_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "par.dg", TWO_PARALLEL);
    let graph = GraphFile::parse(TWO_PARALLEL).unwrap().to_directed();

    let yes = detour(&f, "1", "7", "3", &[]);
    assert_eq!(code(&yes), 0, "{}", stderr(&yes));
    let doc: WitnessDocument = serde_json::from_str(&stdout(&yes)).unwrap();
    assert!(doc.found);
    assert_eq!(doc.length, 5);
    assert_eq!(doc.path, vec![1, 3, 4, 5, 6, 7]);
    assert_eq!(doc.verdict, "yes");
    doc.revalidate(&graph).unwrap();

    let no = detour(&f, "1", "7", "4", &[]);
    assert_eq!(code(&no), 1);
    let doc: WitnessDocument = serde_json::from_str(&stdout(&no)).unwrap();
    assert!(!doc.found);
    assert_eq!(doc.verdict, "no");

    let same = detour(&f, "1", "1", "3", &[]);
    assert_eq!(code(&same), 2);
    assert!(stderr(&same).contains("differ"), "{}", stderr(&same));

    let out_of_range = detour(&f, "1", "9", "3", &[]);
    assert_eq!(code(&out_of_range), 2);
    assert_eq!(code(&longpath(&["detour", "--graph", s(&f)])), 2);
}

#[test]
fn detour_options() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "par.dg", TWO_PARALLEL);
    for extra in [
        &["--threads", "4"][..],
        &["--backend", "flow-prefilter"],
        &["--strategy", "branch-and-bound"],
        &["--strategy", "subset-dp", "--oracle-cap", "10"],
    ] {
        let o = detour(&f, "1", "7", "3", extra);
        assert_eq!(code(&o), 0, "{extra:?}: {}", stderr(&o));
    }
    let cc = detour(&f, "1", "7", "3", &["--strategy", "color-coding", "--seed", "7"]);
    assert_eq!(code(&cc), 0);
    let bad = detour(&f, "1", "7", "3", &["--backend", "nope"]);
    assert_eq!(code(&bad), 2);
    let explained = detour(&f, "1", "7", "3", &["--explain"]);
    assert!(stderr(&explained).contains("verdict: yes"), "{}", stderr(&explained));
}

#[test]
fn undirected_detour() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c8.ug", &cycle_ug(8));
    // vertices 1 and 4 sit at distance 3; the long way round has 5 edges
    let o = detour(&f, "1", "4", "2", &[]);
    assert_eq!(code(&o), 0);
    let doc: WitnessDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.length, 5);
    assert_eq!(code(&detour(&f, "1", "4", "3", &[])), 1);

    // both arcs leave vertex 2, so 3 is reachable from 1 only along edges
    let p = write(&dir, "path.dg", "p dg 3 2\na 2 1\na 2 3\n");
    assert_eq!(code(&detour(&p, "1", "3", "0", &[])), 1, "unreachable as a digraph");
    assert_eq!(code(&detour(&p, "1", "3", "0", &["--undirected"])), 0);
}

#[test]
fn parse_errors_name_lines() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.dg", "p dg 3 2\na 1 2\na 2 4\n");
    let o = detour(&f, "1", "2", "0", &[]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let missing = detour(&dir.path().join("absent.dg"), "1", "2", "0", &[]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn budget_starved_runs_are_inconclusive_not_negative() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p dg 9 72\n");
    for u in 1..=9 {
        for v in 1..=9 {
            if u != v {
                text += &format!("a {u} {v}\n");
            }
        }
    }
    let f = write(&dir, "k9.dg", &text);
    let log = dir.path().join("runs.jsonl");
    let mut codes = Vec::new();
    for k in ["1", "3", "5", "7", "8"] {
        let o = detour(&f, "1", "2", k, &["--strategy", "branch-and-bound", "--node-budget", "1", "--log", s(&log)]);
        let doc: WitnessDocument = serde_json::from_str(&stdout(&o)).unwrap();
        if code(&o) == 3 {
            assert_eq!(doc.verdict, "inconclusive");
            assert_eq!(serde_json::to_value(doc.verdict_meta).unwrap()["kind"], "inconclusive");
        }
        codes.push(code(&o));
    }
    assert!(codes.contains(&3), "{codes:?}");
    assert!(!codes.contains(&1), "{codes:?}");
    // with the default budget, k = 8 exceeds every simple path
    assert_eq!(code(&detour(&f, "1", "2", "8", &["--log", s(&log)])), 1);
    let records = read_log(&log).unwrap();
    assert_eq!(records.len(), 6);
    assert_eq!(records[5].verdict, "no");
    assert!(audit(&records).is_empty());
}

#[test]
fn lpad_examples() {
    let dir = TempDir::new().unwrap();
    let c10 = write(&dir, "c10.ug", &cycle_ug(10));
    let o = longpath(&["lpad", "--graph", s(&c10), "--k", "3", "--mode", "undirected2c"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: WitnessDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.length, 8);
    assert_eq!(serde_json::to_value(doc.baseline).unwrap()["kind"], "diameter");

    let g1 = dir.path().join("g1.dg");
    assert_eq!(code(&longpath(&["gen", "gl", "--ell", "1", "-o", s(&g1)])), 0);
    let o = longpath(&["lpad", "--graph", s(&g1), "--k", "4", "--mode", "directed2sc"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: WitnessDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.length >= 22);
    doc.revalidate(&GraphFile::parse(&std::fs::read_to_string(&g1).unwrap()).unwrap().to_directed()).unwrap();

    let tree = write(&dir, "path.ug", "p ug 3 2\ne 1 2\ne 2 3\n");
    let o = longpath(&["lpad", "--graph", s(&tree), "--k", "1", "--mode", "undirected2c"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("2-connected"), "{}", stderr(&o));
    let o = longpath(&["lpad", "--graph", s(&tree), "--k", "1", "--mode", "directed2sc"]);
    assert_eq!(code(&o), 2);

    let o = longpath(&["lpad", "--graph", s(&c10), "--k", "6", "--mode", "oracle"]);
    assert_eq!(code(&o), 1);
    let doc: WitnessDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.notice.is_some());
}

#[test]
fn gen_gl_and_verify() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g1.dg");
    let o = longpath(&["gen", "gl", "--ell", "1", "-o", s(&g)]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&g).unwrap();
    assert_eq!(text.lines().next(), Some("p dg 36 76"));

    let g2 = dir.path().join("g2.dg");
    let bp = dir.path().join("g2.json");
    assert_eq!(code(&longpath(&["gen", "gl", "--ell", "2", "-o", s(&g2), "--blueprint", s(&bp)])), 0);
    let o = longpath(&["verify", "gl", "--graph", s(&g2), "--blueprint", s(&bp)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("[pass]"));

    // verifying G_2 against a G_1 blueprint fails clause by clause
    let bp1 = dir.path().join("g1.json");
    assert_eq!(code(&longpath(&["gen", "gl", "--ell", "1", "-o", s(&g), "--blueprint", s(&bp1)])), 0);
    let o = longpath(&["verify", "gl", "--graph", s(&g2), "--blueprint", s(&bp1)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));

    let doc: BlueprintDocument = serde_json::from_str(&std::fs::read_to_string(&bp).unwrap()).unwrap();
    assert_eq!(doc.ell, 2);
    assert_eq!(doc.vertices, 52);
}

#[test]
fn generators_are_deterministic_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.dg"), dir.path().join("b.dg"));
    let (ja, jb) = (dir.path().join("a.json"), dir.path().join("b.json"));
    longpath(&["gen", "gl", "--ell", "3", "-o", s(&a), "--blueprint", s(&ja)]);
    longpath(&["gen", "gl", "--ell", "3", "-o", s(&b), "--blueprint", s(&jb)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(std::fs::read(&ja).unwrap(), std::fs::read(&jb).unwrap());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(GraphFile::parse(&text).unwrap().write(), text);
}

#[test]
fn reduce_k1() {
    let dir = TempDir::new().unwrap();
    let k3 = write(&dir, "k3.ug", "p ug 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = dir.path().join("r.ug");
    let emb = dir.path().join("r.json");
    let o = longpath(&["gen", "reduce-k1", "--graph", s(&k3), "-o", s(&out), "--blueprint", s(&emb)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("p ug 8 "), "{text}");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(doc["reduction"], "reduce-k1");
    assert_eq!(doc["targetK"], 1);
    assert_eq!(doc["claimedDiameter"], 4);

    let o = longpath(&["oracle", "diameter", "--graph", s(&out)]);
    let d: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d["diameter"], 4);
    let o = longpath(&["oracle", "longest-path", "--graph", s(&out)]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 5, "K3 is Hamiltonian: a path of length 2n-1");

    let dg = write(&dir, "x.dg", "p dg 2 1\na 1 2\n");
    assert_eq!(code(&longpath(&["gen", "reduce-k1", "--graph", s(&dg), "-o", s(&out)])), 2);
}

#[test]
fn reduce_kge5() {
    let dir = TempDir::new().unwrap();
    let c75 = write(&dir, "c75.ug", &cycle_ug(75));
    let out = dir.path().join("r.dg");
    let o = longpath(&["gen", "reduce-kge5", "--graph", s(&c75), "--k", "5", "--w", "1", "-o", s(&out)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("need |V(H)| ≡ 0 (mod 4), ≥ 76"), "{}", stderr(&o));

    let c76 = write(&dir, "c76.ug", &cycle_ug(76));
    let emb = dir.path().join("r.json");
    let o = longpath(&[
        "gen",
        "reduce-kge5",
        "--graph",
        s(&c76),
        "--k",
        "5",
        "--w",
        "3",
        "-o",
        s(&out),
        "--blueprint",
        s(&emb),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("p dg 400 "));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(doc["w"], 3);
    assert_eq!(doc["claimedDiameter"], 162);
    assert_eq!(doc["gadget"]["ell"], 19);
    let o = longpath(&["oracle", "diameter", "--graph", s(&out)]);
    let d: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d["diameter"], 162);
}

#[test]
fn oracle_commands() {
    let dir = TempDir::new().unwrap();
    let g2 = dir.path().join("g2.dg");
    longpath(&["gen", "gl", "--ell", "2", "-o", s(&g2)]);
    let o = longpath(&["oracle", "diameter", "--graph", s(&g2)]);
    assert_eq!(code(&o), 0);
    let d: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d["diameter"], 26);

    let f = write(&dir, "par.dg", TWO_PARALLEL);
    let o = longpath(&["oracle", "detour", "--graph", s(&f), "--source", "1", "--target", "7"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["dist"].as_u64(), v["kStar"].as_u64(), v["value"].as_u64()), (Some(2), Some(3), Some(5)));
    let o = longpath(&["oracle", "longest-st-path", "--graph", s(&f), "--source", "7", "--target", "1"]);
    assert_eq!(code(&o), 1);
    let o = longpath(&["oracle", "longest-path", "--graph", s(&f)]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 5);
    assert_eq!(v["exact"], true);
    let o = longpath(&["oracle", "diameter", "--graph", s(&f)]);
    assert_eq!(code(&o), 2, "not strongly connected");
}

#[test]
fn bench_suite() {
    let o = longpath(&["bench", "--suite", "detour-vs-oracle"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("agreement 100.0%"), "{}", stdout(&o));
    let o = longpath(&["bench", "--suite", "nope"]);
    assert_eq!(code(&o), 2);

    let dir = TempDir::new().unwrap();
    let log = dir.path().join("log.jsonl");
    let o = longpath(&["bench", "--suite", "negative-hygiene", "--threads", "3", "--log", s(&log)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let records = read_log(&log).unwrap();
    assert!(records.len() > 10_000);
    assert!(audit(&records).is_empty());
}
