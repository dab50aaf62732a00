//! End-to-end tests of the `geg` binary: subcommands, formats, exit codes.

use std::process::{Command, Output};

fn geg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.edges");
    std::fs::write(&path, "p geg 4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();

    let out = geg(&["compute", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("g = 2"), "{text}");
    assert!(text.contains("eg = 2"));
    assert!(text.contains("seg = 3"));
    assert!(text.contains("meg = 4"));

    let out = geg(&["compute", path.to_str().unwrap(), "--params", "meg"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "meg = 4");

    let out = geg(&["compute", path.to_str().unwrap(), "--certificate", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format"], "geg-result");
    assert_eq!(doc["parameters"]["meg"], 4);
    assert_eq!(doc["certificates"].as_array().unwrap().len(), 4);
}

#[test]
fn compute_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.edges");
    std::fs::write(&path, "a b\nb b\n").unwrap();
    let out = geg(&["compute", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = geg(&["compute", "/nonexistent/file.edges"]);
    assert_eq!(out.status.code(), Some(2));

    let out = geg(&["compute", path.to_str().unwrap(), "--params", "zzz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_formats_and_verification() {
    let out = geg(&["construct", "2", "3", "4", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p geg "), "{text}");

    let out = geg(&["construct", "3", "3", "3", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph geg {"));
    assert!(text.contains("label=\"w_1\""));

    let out = geg(&["construct", "2", "4", "4", "6", "--format", "json", "--no-verify"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format"], "geg-construction");
    assert_eq!(doc["target"], serde_json::json!([2, 4, 4, 6]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let out = geg(&["construct", "2", "2", "5", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    let reparsed = geg::parse_edge_list(&written).unwrap();
    let q = geg::quadruple(&reparsed, &geg::SolverConfig::default()).unwrap();
    assert_eq!(q.values(), (2, 2, 5, 5));

    // provably unrealizable target: reported, exit 1
    let out = geg(&["construct", "2", "3", "3", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("infeasible"));

    // malformed target: usage error
    let out = geg(&["construct", "1", "2", "3", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_command() {
    let out = geg(&["verify", "2", "3", "4", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("pass"));

    let out = geg(&["verify", "2", "3", "3", "4"]);
    assert!(out.status.success(), "rejection counts as pass");
    assert!(stdout(&out).contains("infeasible"));

    let out = geg(&["verify", "2", "2", "2", "6", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["feasibility"], "Infeasible222");
}

#[test]
fn sweep_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = geg(&["sweep", "--max-d", "4", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("swept 15 quadruples"), "{text}");
    assert!(text.contains("0 fail"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["format"], "geg-sweep-report");
    assert_eq!(doc["report"]["entries"].as_array().unwrap().len(), 15);
}

#[test]
fn enumerate_command() {
    let out = geg(&["enumerate", "--vertices", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("38 connected graphs"));

    let out = geg(&["enumerate", "--vertices", "4", "--lemmas"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all structural lemmas hold"));

    let out = geg(&["enumerate", "--vertices", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let out = geg(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = geg(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
}
