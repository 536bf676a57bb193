//! End-to-end checks of the binary: flags, files, exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hadamard"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("missing {name}: {e}"))
}

#[test]
fn example_default_run_passes_and_emits_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["example", "--out", "."]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("verdict: x > sqrt(3): PASS"));
    assert!(text.contains("verdict: hulls differ: PASS"));
    assert!(text.contains("example: PASS"));

    let table = read(dir.path(), "example_quantities.csv");
    assert!(table.starts_with("name,computed,reference,abs_error,pass"));
    for line in table.lines().skip(1) {
        assert!(line.ends_with(",true"), "failing row: {line}");
    }

    // both polylines share the endpoints (1, sqrt2) and (-1, sqrt2)
    let gc = read(dir.path(), "example_geodesic_hull.csv");
    let rows: Vec<&str> = gc.lines().collect();
    assert_eq!(rows.len(), 258, "grid 256 gives 257 samples plus header");
    let first: Vec<f64> = rows[1].split(',').map(|x| x.parse().unwrap()).collect();
    let last: Vec<f64> = rows[257].split(',').map(|x| x.parse().unwrap()).collect();
    let s2 = 2f64.sqrt();
    assert!((first[1] - 1.0).abs() < 1e-9 && (first[2] - s2).abs() < 1e-9);
    assert!((last[1] + 1.0).abs() < 1e-9 && (last[2] - s2).abs() < 1e-9);

    let hull = read(dir.path(), "example_convex_hull.csv");
    let mut min_u = f64::INFINITY;
    let mut max_u = f64::NEG_INFINITY;
    for line in hull.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        min_u = min_u.min(cols[1]);
        max_u = max_u.max(cols[1]);
        let r = cols[1] * cols[1] + cols[2] * cols[2];
        assert!((r - 3.0).abs() <= 1e-6, "hull point off carrier: {line}");
    }
    assert!((min_u + 1.0).abs() < 1e-9 && (max_u - 1.0).abs() < 1e-9);
}

#[test]
fn example_json_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["example", "--out", ".", "--format", "json"]);
    assert!(out.status.success());
    let table = read(dir.path(), "example_quantities.jsonl");
    for line in table.lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid json");
        assert_eq!(value["pass"], serde_json::Value::Bool(true), "row: {line}");
    }
}

#[test]
fn example_rejects_flat_model() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["example", "--model", "euclidean"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn probes_flat_signature_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "probes",
            "--model",
            "euclidean",
            "--dim",
            "2",
            "--seed",
            "1",
            "--out",
            ".",
        ],
    );
    assert!(out.status.success());
    let lines: Vec<String> = read(dir.path(), "probes.jsonl")
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 5);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let defect = v["defect"].as_f64().unwrap();
        let cap = if v["clause"] == "curvature" {
            1e-6
        } else {
            1e-9
        };
        assert!(defect <= cap, "{line}");
        assert_eq!(v["seed"].as_u64(), Some(1));
    }
}

#[test]
fn probes_halfplane_signature_positive() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["probes", "--out", ".", "--seed", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("signature: PASS"));
    for line in read(dir.path(), "probes.jsonl").lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if v["clause"] == "curvature" {
            let k = v["statistic"].as_f64().unwrap();
            assert!((-1.05..=-0.95).contains(&k));
        } else {
            assert!(v["defect"].as_f64().unwrap() >= 0.05);
        }
    }
}

#[test]
fn probes_transported_base_keeps_signature() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["probes", "--base", "3,2", "--out", "."]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn probes_invalid_base_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["probes", "--base", "0,-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("v > 0"));
}

#[test]
fn probes_dim_mismatch_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "probes",
            "--model",
            "euclidean",
            "--dim",
            "3",
            "--base",
            "0,0",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hull_default_pair_converges_first_round() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["hull", "--out", "."]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("converged at k=1"));
    let iterations = read(dir.path(), "hull_iterations.csv");
    assert!(iterations.starts_with("k,cloud_size,residual"));
    assert_eq!(iterations.lines().count(), 3); // header + two rounds
    let points = read(dir.path(), "hull_points.csv");
    assert!(points.starts_with("index,u,v"));
    assert!(points.lines().count() > 500);
}

#[test]
fn hull_single_point_is_already_converged() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["hull", "--points", "0,2", "--out", "."]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("converged at k=0"));
    assert_eq!(read(dir.path(), "hull_points.csv").lines().count(), 2);
}

#[test]
fn hull_flat_square_fills() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "hull",
            "--model",
            "euclidean",
            "--points",
            "1,1;1,-1;-1,1;-1,-1",
            "--snap",
            "0.02",
            "--tol",
            "0.1",
            "--out",
            ".",
        ],
    );
    assert!(out.status.success(), "{}", stdout(&out));
    for line in read(dir.path(), "hull_points.csv").lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(cols[1].abs() <= 1.0 + 1e-9 && cols[2].abs() <= 1.0 + 1e-9);
    }
}

#[test]
fn hull_reports_non_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "hull", "--tol", "1e-12", "--k-max", "2", "--grid", "4", "--out", ".",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("did not converge"));
}

#[test]
fn hull_points_file_input() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("pts.csv"),
        "u,v\n1,1.4142135623730951\n-1,1.4142135623730951\n",
    )
    .unwrap();
    let out = run_in(
        dir.path(),
        &["hull", "--points-file", "pts.csv", "--out", "."],
    );
    assert!(out.status.success());
}

#[test]
fn curve_reports_reference_deviation() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["curve", "--grid", "64", "--out", "."]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("max deviation 0.0739190958 at t = 0.5"));
    let rows = read(dir.path(), "curve.csv");
    assert_eq!(rows.lines().count(), 66);
    assert!(rows.starts_with("t,interp_u,interp_v,geo_u,geo_v,deviation"));
}

#[test]
fn curve_flat_deviation_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &[
            "curve",
            "--model",
            "euclidean",
            "--base",
            "5,5",
            "--q1",
            "0,0",
            "--q2",
            "2,0",
            "--grid",
            "2",
            "--out",
            ".",
        ],
    );
    assert!(out.status.success());
    let rows = read(dir.path(), "curve.csv");
    let mid: Vec<&str> = rows.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(mid[1].parse::<f64>().unwrap(), 1.0);
    assert_eq!(mid[2].parse::<f64>().unwrap(), 0.0);
}

#[test]
fn config_file_is_used_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("cfg.json"),
        r#"{"grid": 8, "out": "from_config"}"#,
    )
    .unwrap();

    let out = run_in(dir.path(), &["curve", "--config", "cfg.json"]);
    assert!(out.status.success());
    let rows = read(dir.path(), "from_config/curve.csv");
    assert_eq!(rows.lines().count(), 10); // header + grid 8 + 1

    // the flag wins over the config value
    let out = run_in(
        dir.path(),
        &["curve", "--config", "cfg.json", "--grid", "4"],
    );
    assert!(out.status.success());
    let rows = read(dir.path(), "from_config/curve.csv");
    assert_eq!(rows.lines().count(), 6);
}

#[test]
fn bad_config_key_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("cfg.json"), r#"{"grids": 8}"#).unwrap();
    let out = run_in(dir.path(), &["curve", "--config", "cfg.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_with_usage_code() {
    let out = bin().args(["probes", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn example_output_is_byte_identical_across_runs() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let args = ["example", "--out", ".", "--grid", "64", "--seed", "9"];
    let out_a = run_in(dir_a.path(), &args);
    let out_b = run_in(dir_b.path(), &args);
    assert!(out_a.status.success() && out_b.status.success());
    assert_eq!(out_a.stdout, out_b.stdout);
    for name in [
        "example_quantities.csv",
        "example_convex_hull.csv",
        "example_geodesic_hull.csv",
    ] {
        assert_eq!(
            read(dir_a.path(), name),
            read(dir_b.path(), name),
            "{name} differs between identical runs"
        );
    }
}
