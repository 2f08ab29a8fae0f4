use std::process::{Command, Output};

use serde_json::Value;

fn degpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degpow"))
        .args(args)
        .env_remove("DEGPOW_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn construct_graph6_and_profile() {
    let out = degpow(&["construct", "gprime:n=20,d=10", "--format", "graph6"]);
    assert!(out.status.success());
    let line = String::from_utf8(out.stdout).unwrap();
    assert!(line.ends_with('\n'));
    let g = degpow_core::graph::graph6::decode(line.trim()).unwrap();
    assert_eq!(g.order(), 20);

    let out = degpow(&["construct", "turan:n=5,r=2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["profile"], serde_json::json!([[2, 3], [3, 2]]));
}

#[test]
fn construct_errors() {
    let out = degpow(&["construct", "gstar:n=6,d=3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = degpow(&["construct", "gprime:n=2x,d=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 9"));
    let out = degpow(&["construct", "gprime:n=80,d=10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports() {
    let out = degpow(&["verify", "leading-coeff", "--p", "4", "--a", "3/5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["claim"], "leading-coeff");
    assert_eq!(v["pass"], true);
    assert_eq!(v["witness"]["expected"], "42/625");

    let out = degpow(&["verify", "f-positivity", "--p", "2", "--step", "1/512"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["witness"]["min_value"].as_str().is_some());
    assert_eq!(v["witness"]["argmin"].as_array().unwrap().len(), 2);

    assert_eq!(degpow(&["verify", "leading-coeff", "--p", "0"]).status.code(), Some(2));
    assert_eq!(degpow(&["verify", "no-such-claim", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = degpow(&["verify", "all", "--p", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["witness"]["failed"], serde_json::json!([]));
}

#[test]
fn search_values() {
    let v = json(&degpow(&["search", "--n", "4", "--p", "3"]));
    assert_eq!(v["ex_p"], "108");
    assert_eq!(v["maximizers"].as_array().unwrap().len(), 1);
    assert_eq!(v["maximizers"][0]["graph6"], "C~");
    assert!(v.get("elapsed_ms").is_none());

    let v = json(&degpow(&["search", "--n", "5", "--p", "1"]));
    assert_eq!(v["ex_p"], "14");

    assert_eq!(degpow(&["search", "--n", "12", "--p", "2"]).status.code(), Some(3));
    let v = json(&degpow(&["search", "--n", "5", "--p", "2", "--timing"]));
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn search_output_is_reproducible() {
    let a = degpow(&["search", "--n", "7", "--p", "2", "--workers", "1"]);
    let b = degpow(&["search", "--n", "7", "--p", "2", "--workers", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn optimize_c_table() {
    let out = degpow(&["optimize-c", "--p", "2..5", "--tol", "1e-9"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    let c: Vec<f64> = rows.iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(c[0], 0.5);
    assert_eq!(c[1], 0.5);
    assert!((c[2] - 0.788675).abs() < 1e-6);
    assert!((c[3] - 0.832).abs() < 1e-3);

    let out = degpow(&["optimize-c", "--p", "2..2", "--tol", "1e-3"]);
    let c: f64 = String::from_utf8(out.stdout).unwrap().lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!((c - 0.5).abs() < 1e-2);

    assert_eq!(degpow(&["optimize-c", "--p", "0..1"]).status.code(), Some(2));
    let out = degpow(&["optimize-c", "--p", "1"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("1,0.5"));
}

#[test]
fn epow_at_any_order() {
    let v = json(&degpow(&["epow", "turan:n=1000,r=2", "--p", "3"]));
    assert_eq!(v["e_p"], "125000000000");
    let v = json(&degpow(&["epow", "--graph6", "DQc", "--p", "2"]));
    assert_eq!(v["e_p"], "14");
}

#[test]
fn sweep_notes_non_bicliques() {
    let v = json(&degpow(&["sweep", "--n", "4..5", "--p", "1..2"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["all_complete_bipartite"], false);
        assert!(row["note"].as_str().unwrap().contains("not complete bipartite"));
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("degpow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.g6");
    let out = degpow(&["construct", "kbip:a=2,b=2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "C]\n");
    std::fs::remove_dir_all(dir).unwrap();
}
