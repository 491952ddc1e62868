use std::path::PathBuf;
use std::process::Command;

use posspan::cli::{verify_report, ReportInput, EXIT_ERROR, EXIT_NO, EXIT_YES};
use posspan::digraph::{parse_digraph, read_digraph_file, read_tree_file};
use posspan::exact::{parse_matrix, read_matrix_file};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn posspan(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_posspan"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out) = posspan(&full);
    (code, serde_json::from_str(&out).expect("valid JSON report"))
}

fn matrix_command(cmd: &str, file: &str, expected: i32) -> Value {
    let path = fixture(file);
    let (code, report) = json(&[cmd, path.to_str().unwrap()]);
    assert_eq!(code, expected, "{cmd} {file}");
    assert_eq!(report["schema"], 1);
    assert_eq!(report["command"], cmd);
    let m = read_matrix_file(&path).unwrap();
    verify_report(&report, ReportInput::Matrix(&m)).unwrap();
    report
}

#[test]
fn check_pss_fixtures() {
    let r = matrix_command("check-pss", "m1.mat", EXIT_YES);
    assert_eq!(r["certificate"]["kind"], "positive-combination");
    assert_eq!(
        r["certificate"]["values"],
        serde_json::json!(["1", "1", "2", "1", "1", "1"])
    );
    let r = matrix_command("check-pss", "m2.mat", EXIT_NO);
    assert_eq!(r["certificate"]["kind"], "separating-vector");
    matrix_command("check-pss", "d58.mat", EXIT_YES);
    matrix_command("check-pss", "redundant.mat", EXIT_YES);
}

#[test]
fn decompose_fixtures() {
    let r = matrix_command("decompose", "m1.mat", EXIT_YES);
    assert_eq!(r["form"]["kind"], "in");
    assert_eq!(r["form"]["ell"], 4);
    let r = matrix_command("decompose", "m2.mat", EXIT_NO);
    assert_eq!(r["form"]["kind"], "ina");
}

#[test]
fn basis_fixtures() {
    matrix_command("basis", "d58.mat", EXIT_YES);
    matrix_command("basis", "m1.mat", EXIT_YES);
    let r = matrix_command("basis", "redundant.mat", EXIT_NO);
    assert_eq!(r["certificate"]["column"], 2);
    matrix_command("basis", "m2.mat", EXIT_NO);
}

#[test]
fn graph_actions() {
    let two_ears = fixture("two_ears.dg");
    let two_circuits = fixture("two_circuits.dg");
    let weak7 = fixture("weak7.dg");
    let cases: [(&str, &PathBuf, Option<&str>, i32); 8] = [
        ("check", &two_ears, None, EXIT_YES),
        ("ears", &two_ears, None, EXIT_YES),
        ("minimal", &two_ears, None, EXIT_NO),
        ("check", &weak7, Some("weak7.tree"), EXIT_NO),
        ("cut", &weak7, Some("weak7.tree"), EXIT_YES),
        ("netmat", &two_circuits, Some("two_circuits.tree"), EXIT_YES),
        ("check", &two_circuits, Some("two_circuits.tree"), EXIT_YES),
        ("minimal", &two_circuits, None, EXIT_YES),
    ];
    for (action, dg, tree, expected) in cases {
        let mut args = vec!["graph", action, dg.to_str().unwrap()];
        let tree_path = tree.map(fixture);
        if let Some(t) = &tree_path {
            args.push("--tree");
            args.push(t.to_str().unwrap());
        }
        let (code, report) = json(&args);
        assert_eq!(code, expected, "{action} {}", dg.display());
        let g = read_digraph_file(dg).unwrap();
        let t = tree_path.map(|p| read_tree_file(&g, p).unwrap());
        verify_report(&report, ReportInput::Graph(&g, t.as_ref())).unwrap();
    }
}

#[test]
fn ears_of_a_weak_digraph_give_a_cut() {
    let path = fixture("weak7.dg");
    let (code, report) = json(&["graph", "ears", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_NO);
    assert_eq!(report["certificate"]["kind"], "oriented-cut");
    assert_eq!(
        report["certificate"]["cut_arcs"],
        serde_json::json!([0, 1, 8])
    );
}

#[test]
fn network_matrix_reproduces_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.mat");
    let (code, _) = posspan(&[
        "graph",
        "netmat",
        fixture("weak7.dg").to_str().unwrap(),
        "--tree",
        fixture("weak7.tree").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_YES);
    let written = read_matrix_file(&out).unwrap();
    assert_eq!(written, read_matrix_file(fixture("m2.mat")).unwrap());
}

#[test]
fn generate_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pb.mat");
    let (code, text) = posspan(&[
        "generate",
        "min-pb",
        "--n",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_YES);
    assert!(text.contains("min-pb"));
    let m = read_matrix_file(&out).unwrap();
    assert_eq!(
        m.to_string(),
        "4 5\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n"
    );
    let (code, report) = json(&["basis", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_YES);
    verify_report(&report, ReportInput::Matrix(&m)).unwrap();

    let (code, report) = json(&["generate", "digraph-n-1", "--n", "5", "--overlap", "1"]);
    assert_eq!(code, EXIT_YES);
    let g = parse_digraph(report["digraph"].as_str().unwrap()).unwrap();
    assert_eq!(g.arc_count(), 6);
    verify_report(&report, ReportInput::Embedded).unwrap();

    let (code, report) = json(&["generate", "pb-2l-1", "--ell", "4", "--seed", "7"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(report["seed"], 7);
    let m = parse_matrix(report["matrix"].as_str().unwrap()).unwrap();
    let dir_file = dir.path().join("g.mat");
    std::fs::write(&dir_file, m.to_string()).unwrap();
    let (code, _) = json(&["basis", dir_file.to_str().unwrap()]);
    assert_eq!(code, EXIT_YES);
}

#[test]
fn generate_is_deterministic_per_seed() {
    let a = json(&["generate", "digraph-2n-3", "--n", "8", "--seed", "11"]).1;
    let b = json(&["generate", "digraph-2n-3", "--n", "8", "--seed", "11"]).1;
    assert_eq!(a, b);
    let a = json(&["generate", "pb-l-2", "--ell", "5", "--seed", "3"]).1;
    let b = json(&["generate", "pb-l-2", "--ell", "5", "--seed", "3"]).1;
    assert_eq!(a, b);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(posspan(&["check-pss"]).0, EXIT_ERROR);
    assert_eq!(
        posspan(&["check-pss", "/nonexistent/file.mat"]).0,
        EXIT_ERROR
    );
    assert_eq!(
        posspan(&["generate", "pb-2l-1", "--ell", "4"]).0,
        EXIT_ERROR
    );
    assert_eq!(
        posspan(&["generate", "digraph-n-1", "--n", "2", "--overlap", "0"]).0,
        EXIT_ERROR
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    std::fs::write(&bad, "2 2\n1 0\n0\n").unwrap();
    assert_eq!(posspan(&["basis", bad.to_str().unwrap()]).0, EXIT_ERROR);
    let zero = dir.path().join("zero.mat");
    std::fs::write(&zero, "2 2\n0 0\n0 0\n").unwrap();
    assert_eq!(
        posspan(&["decompose", zero.to_str().unwrap()]).0,
        EXIT_ERROR
    );
}

#[test]
fn text_summary_mentions_verdict() {
    let (code, text) = posspan(&["check-pss", fixture("m2.mat").to_str().unwrap()]);
    assert_eq!(code, EXIT_NO);
    assert!(text.contains("verdict: not-pss"));
    assert!(text.contains("values: 1 1 0 0 0 0"));
}
