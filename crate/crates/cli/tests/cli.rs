use std::path::Path;
use std::process::{Command, Output};

use hyperlayer::verify::expected_seven_cell_matrix;
use hyperlayer::{h_graph, hypercube, l_graph, layer_graph, spectrum, Graph};
use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlayer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn header(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success());
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .find(|l| l.starts_with("p "))
        .unwrap()
        .to_string()
}

#[test]
fn gen_headers() {
    assert_eq!(
        header(&["gen", "--graph", "l:5", "--format", "edges"]),
        "p 20 40"
    );
    assert_eq!(
        header(&["gen", "--graph", "h:5", "--format", "edges"]),
        "p 15 20"
    );
    assert_eq!(header(&["gen", "--graph", "q:3"]), "p 8 12");
}

#[test]
fn gen_json_and_out_file() {
    let v = run_json(&["gen", "--graph", "h:4", "--format", "json"]);
    assert_eq!(v["vertex_count"], 10);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
    assert_eq!(v["labels"][4], "{1,2}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l4.txt");
    let counts = run_json(&["gen", "--graph", "l:4", "--out", path.to_str().unwrap()]);
    assert_eq!(counts, json!({ "vertices": 12, "edges": 18 }));
    assert!(path.exists());
}

#[test]
fn spectrum_examples() {
    let v = run_json(&["spectrum", "--graph", "l:4"]);
    assert_eq!(
        v["roots"],
        json!([[3, 1], [2, 3], [0, 2], [-1, 3], [-2, 3]])
    );
    assert_eq!(v["residual"], json!(["1"]));
    assert_eq!(v["integral"], true);

    let v = run_json(&["spectrum", "--graph", "h:4"]);
    assert_eq!(v["integral"], false);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edge.txt");
    std::fs::write(&path, "p 2 1\ne 0 1\n").unwrap();
    let v = run_json(&["spectrum", "--graph", &format!("file:{}", path.display())]);
    assert_eq!(v["roots"], json!([[1, 1], [-1, 1]]));
}

#[test]
fn orbit_examples() {
    let sizes = |fix: &str, n: &str| {
        run_json(&["orbits", "--graph", n, "--fix", fix])["cell_sizes"].clone()
    };
    assert_eq!(sizes("1", "l:5"), json!([4, 4, 12]));
    assert_eq!(sizes("1,2", "l:5"), json!([1, 3, 1, 3, 3, 3, 6]));
    assert_eq!(sizes("∅", "l:4"), json!([12]));
    assert!(!run(&["orbits", "--graph", "l:4", "--fix", "5"])
        .status
        .success());
}

#[test]
fn orbits_from_permutation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perms.txt");
    std::fs::write(&path, "(1 2 3 4)\n").unwrap();
    let v = run_json(&[
        "orbits",
        "--graph",
        "q:2",
        "--perms",
        path.to_str().unwrap(),
    ]);
    assert_eq!(v["cell_sizes"], json!([4]));
}

#[test]
fn quotient_examples() {
    let v = run_json(&["quotient", "--graph", "l:5", "--fix", "1,2"]);
    assert_eq!(v["quotient"]["p"], json!(expected_seven_cell_matrix(5)));
    let v = run_json(&["quotient", "--graph", "l:5", "--fix", "1"]);
    assert_eq!(v["quotient"]["p"], json!([[3, 1, 0], [1, 0, 3], [0, 1, 3]]));

    let cells = r#"[[0,1,2,3,4],[5,6,7,8,9,10,11,12,13,14]]"#;
    let v = run_json(&["quotient", "--graph", "h:5", "--partition", cells]);
    assert_eq!(v["quotient"]["p"], json!([[0, 4], [2, 0]]));
}

#[test]
fn non_equitable_partition_prints_witness() {
    let out = run(&[
        "quotient",
        "--graph",
        "h:4",
        "--partition",
        "[[0,1,2,3,4],[5,6,7,8,9]]",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["witness"]["vertices"].is_array());
}

#[test]
fn verify_range_and_exit_codes() {
    let out = run(&["verify", "--from", "4", "--to", "6"]);
    assert!(out.status.success());
    let reports: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 3);
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["overall"] == true));

    assert_eq!(
        run(&["verify", "--from", "3", "--to", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--from", "4", "--to", "13"]).status.code(),
        Some(2)
    );
    assert!(!String::from_utf8(run(&["verify", "--help"]).stdout)
        .unwrap()
        .contains("mutate"));
}

fn round_trip(g: &Graph, spec: &str, dir: &Path) {
    let path = dir.join(spec.replace([':', ','], "_"));
    run_json(&["gen", "--graph", spec, "--out", path.to_str().unwrap()]);
    let from_file = run_json(&["spectrum", "--graph", &format!("file:{}", path.display())]);
    let in_memory = serde_json::to_value(spectrum(g).unwrap()).unwrap();
    assert_eq!(from_file, in_memory, "{spec}");
    let direct = run_json(&["spectrum", "--graph", spec]);
    assert_eq!(direct, in_memory, "{spec}");
}

#[test]
fn gen_then_spectrum_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=8 {
        round_trip(&hypercube(n).unwrap(), &format!("q:{n}"), dir.path());
        for i in 0..n {
            round_trip(
                &layer_graph(n, i).unwrap(),
                &format!("q-layer:{n},{i}"),
                dir.path(),
            );
        }
    }
    for n in 2..=8 {
        round_trip(&h_graph(n).unwrap(), &format!("h:{n}"), dir.path());
    }
    for n in 3..=8 {
        round_trip(&l_graph(n).unwrap(), &format!("l:{n}"), dir.path());
    }
}
