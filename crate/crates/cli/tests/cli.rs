use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use qbaf_bench::graphs::{reference_graph, ReferenceGraph};
use qbaf_core::engine::evaluate_literature;
use qbaf_core::Literature;

fn qbaf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbaf")).args(args).env_remove("QBAF_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn graph_file(dir: &tempfile::TempDir, id: &str) -> String {
    let o = qbaf(&["graphs", "--id", id]);
    assert!(o.status.success());
    let path = dir.path().join(format!("{id}.json"));
    fs::write(&path, &o.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

fn row<'a>(csv: &'a str, id: &str) -> Vec<&'a str> {
    csv.lines().find(|l| l.starts_with(&format!("{id},"))).expect("row present").split(',').collect()
}

#[test]
fn eval_literature_rounded() {
    let dir = tempfile::tempdir().unwrap();
    let f = graph_file(&dir, "fig1");
    let o = qbaf(&["eval", &f, "--semantics", "dfquad", "--round", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().next().unwrap().starts_with("argument,"));
    assert!(row(&stdout(&o), "a").contains(&"0.47"));
}

#[test]
fn eval_explicit_triple() {
    let dir = tempfile::tempdir().unwrap();
    let f = graph_file(&dir, "fig1");
    let o = qbaf(&["eval", &f, "--phi-r", "tnorm_product", "--phi-s", "tconorm_drastic", "--phi-f", "example3", "--round", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(row(&stdout(&o), "a").contains(&"0.73"));
}

#[test]
fn cycles_validate_but_do_not_evaluate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.json");
    fs::write(
        &path,
        r#"{"arguments":[{"id":"a","weight":0.5},{"id":"b","weight":0.5}],"attacks":[["a","b"],["b","a"]],"supports":[]}"#,
    )
    .unwrap();
    let f = path.to_str().unwrap();
    assert_eq!(qbaf(&["validate", f]).status.code(), Some(0));
    let o = qbaf(&["eval", f, "--semantics", "qe"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cycle"), "{}", stderr(&o));
}

#[test]
fn invalid_weight_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"arguments":[{"id":"a","weight":1.3}],"attacks":[],"supports":[]}"#).unwrap();
    assert_eq!(qbaf(&["validate", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2_and_name_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = graph_file(&dir, "fig1");
    let o = qbaf(&["eval", &f, "--phi-r", "nope", "--phi-s", "max", "--phi-f", "avg_am"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--phi-r"));
    let o = qbaf(&["eval", &f, "--semantics", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--semantics"));
    assert_eq!(qbaf(&["eval", &f, "--semantics", "qe", "--phi-r", "max"]).status.code(), Some(2));
    assert_eq!(qbaf(&["graphs", "--id", "nope"]).status.code(), Some(2));
}

#[test]
fn piped_graph_matches_library() {
    let graph = qbaf(&["graphs", "--id", "fig6_final"]).stdout;
    let mut child = Command::new(env!("CARGO_BIN_EXE_qbaf"))
        .args(["eval", "/dev/stdin", "--semantics", "ebs"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&graph).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let want = evaluate_literature(Literature::Ebs, &reference_graph(ReferenceGraph::Fig6Final)).unwrap().to_csv(None);
    assert_eq!(stdout(&o), want);
}

#[test]
fn table4_reports_the_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t4.csv");
    let o = qbaf(&["table4", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("14/15 rows match"));
    assert!(stderr(&o).contains("S7 pi_r_a"));
    assert!(csv.exists());
}

#[test]
fn sweep_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = qbaf(&["sweep", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    for f in ["sweep.csv", "histogram.csv", "histogram.svg"] {
        assert!(out.join(f).exists(), "{f}");
    }
    assert!(stdout(&o).contains("515 semantics"));
}

#[test]
fn examples_pass_their_closed_forms() {
    let o = qbaf(&["examples"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("printed value differs"));
}

#[test]
fn principles_honour_the_seed_variable() {
    let run = |seed: Option<&str>, flag: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_qbaf"));
        c.args(["principles", "--semantics", "qe", "--principle", "a6", "--trials", "20"]).args(flag);
        match seed {
            Some(s) => c.env("QBAF_SEED", s),
            None => c.env_remove("QBAF_SEED"),
        };
        let o = c.output().unwrap();
        assert!(o.status.success(), "{}", stderr(&o));
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()
    };
    assert_eq!(run(None, &[])["seed"], 1);
    assert_eq!(run(Some("42"), &[])["seed"], 42);
    assert_eq!(run(Some("42"), &["--seed", "5"])["seed"], 5);
    let v = run(Some("42"), &[]);
    assert_eq!(v["verdicts"][0]["status"], "no_counterexample");
}

#[test]
fn postulates_single_aggregator() {
    let o = qbaf(&["postulates", "--agg", "max"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn graphs_lists_ids() {
    let o = qbaf(&["graphs"]);
    assert!(stdout(&o).lines().any(|l| l == "fig6_final"));
}
