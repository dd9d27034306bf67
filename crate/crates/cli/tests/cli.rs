use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquecode"))
        .args(args)
        .env_remove("CLIQUECODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn graph_file(suffix: &str, text: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("one JSON document")
}

#[test]
fn code_of_example_graph() {
    let out = run(&["code", data("example1.edges").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(2,2,3,3,5,7,10,10,10,11,231)\n");
}

#[test]
fn poly_theta_and_covers() {
    let e1 = data("example1.edges");
    let e1 = e1.to_str().unwrap();
    assert_eq!(
        stdout(&run(&["poly", e1])),
        "2*x1 + 2*x2 + x3 + x4 + x5 + 3*x1*x3 + x2*x4*x5\n"
    );
    assert_eq!(stdout(&run(&["theta", e1])), "theta_t: 5\nminimum_coverings: 1\n");

    let w = data("witness.dimacs");
    let v = json(&["covers", w.to_str().unwrap()]);
    assert_eq!(v["theta_t"], 3);
    let covers = v["coverings"].as_array().unwrap();
    assert_eq!(covers.len(), 2);
    assert!(covers.iter().any(|c| c.as_array().unwrap().contains(&serde_json::json!([0, 1]))));
}

#[test]
fn divisor_closed_form_and_pipeline() {
    let out = run(&["divisor", "60", "--closed-form"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("polynomial: 2*x1 + x2 + x3 + 2*x1*x2 + 2*x1*x3 + x2*x3 + 2*x1*x2*x3\n"));
    assert!(text.contains("theta_t: 3\n"));

    let v = json(&["divisor", "60", "--closed-form", "--pipeline"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["polynomial"], v["pipeline_polynomial"]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 11);

    let searched = json(&["divisor", "60"]);
    assert_eq!(searched["polynomial"], v["polynomial"]);
}

#[test]
fn realize_single_one() {
    let out = run(&["realize", "--sequence", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "vertices: 1\nlabels: 1\nedges: 0\n");
    let v = json(&["realize", "--sequence", "(2,3,6)"]);
    assert_eq!(v["edges"], serde_json::json!([[0, 2], [1, 2]]));
}

#[test]
fn gen_with_closed_form() {
    let v = json(&["gen", "--family", "complete", "--n", "4", "--closed-form"]);
    assert_eq!(v["code"], "(2,2,2,2)");
    assert_eq!(v["polynomial"], "4*x1");
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let v = json(&["gen", "--family", "path", "--n", "3"]);
    assert!(v.get("code").is_none());
}

#[test]
fn iso_with_oracle() {
    let a = graph_file(".edges", "4 3\n0 1\n1 2\n2 3\n");
    let b = graph_file(".g6", "Cr\n");
    let c = graph_file(".edges", "4 3\n0 1\n0 2\n0 3\n");
    let (a, b, c) = (a.path().to_str().unwrap(), b.path().to_str().unwrap(), c.path().to_str().unwrap());
    let v = json(&["iso", a, b, "--oracle"]);
    assert_eq!(v["isomorphic"], v["oracle"]);
    assert_eq!(v["agree"], true);
    let v = json(&["iso", a, c, "--oracle"]);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["oracle"], false);
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn verify_passes_on_witness() {
    let v = json(&["verify", data("witness.dimacs").to_str().unwrap()]);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn format_flag_overrides_detection() {
    let f = graph_file(".txt", "p edge 3 2\ne 1 2\ne 2 3\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&run(&["code", path])), "(2,3,6)\n");
    let out = run(&["code", path, "--format", "edge-list"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let e1 = data("example1.edges");
    let e1 = e1.to_str().unwrap();
    assert_eq!(run(&["code", "/nonexistent/graph.edges"]).status.code(), Some(1));
    assert_eq!(run(&["realize", "--sequence", "2,x"]).status.code(), Some(1));
    assert_eq!(run(&["gen", "--family", "star", "--n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["divisor", "1"]).status.code(), Some(1));

    let out = run(&["code", e1, "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_cliquecode"))
        .args(["code", e1, "--json"])
        .env("CLIQUECODE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "budget");
}

#[test]
fn output_is_deterministic() {
    let e1 = data("example1.edges");
    let args = ["covers", e1.to_str().unwrap(), "--json"];
    let first = run(&args).stdout;
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first);
    }
}

#[test]
fn human_and_json_carry_the_same_fields() {
    let e1 = data("example1.edges");
    let e1 = e1.to_str().unwrap();
    let text = stdout(&run(&["theta", e1]));
    let v = json(&["theta", e1]);
    for line in text.lines() {
        let (key, value) = line.split_once(": ").unwrap();
        assert_eq!(v[key].to_string(), value);
    }
}
