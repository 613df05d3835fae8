use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use maxcut_qaoa::format::round_sig;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxcut-qaoa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn hamiltonian_of_complete_graph() {
    let v = json(&["--fixture", "33", "hamiltonian"]);
    assert_eq!(v["sparsity"], "0.2");
    assert_eq!(v["n"], 5);
    assert_eq!(v["offset"], "-5");
    assert_eq!(v["J"].as_array().unwrap().len(), 10);
    assert_eq!(v["J"][0], serde_json::json!([0, 1, "0.5"]));
    assert!(v["h"].as_array().unwrap().iter().all(|h| h == "0"));
    let aug = v["augmentedMatrix"].as_array().unwrap();
    assert_eq!(aug.len(), 5);
    assert_eq!(aug[0][0], "0");
    assert_eq!(aug[0][1], "0.5");
    assert_eq!(aug[1][0], "0.5");
}

#[test]
fn hamiltonian_of_edgeless_graph() {
    let v = json(&["--graph6", "A?", "hamiltonian"]);
    assert_eq!(v["J"], serde_json::json!([]));
    assert_eq!(v["symmetry"]["gammaConstant"], true);
    assert_eq!(v["symmetry"]["gammaPeriod"], Value::Null);
    assert_eq!(v["symmetry"]["delta"], 0);
}

#[test]
fn hamiltonian_of_four_cycle_has_gamma_period_pi() {
    let v = json(&["--fixture", "13", "hamiltonian"]);
    assert_eq!(v["symmetry"]["gammaPeriod"], round_sig(PI));
    assert_eq!(v["symmetry"]["betaPeriod"], round_sig(PI / 2.0));
    assert_eq!(v["symmetry"]["delta"], 2);
}

#[test]
fn flags_work_after_the_subcommand() {
    assert_eq!(json(&["hamiltonian", "--fixture", "33"])["sparsity"], "0.2");
}

#[test]
fn single_edge_landscape_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let mut last_min = 0.0;
    for steps in ["16", "64", "256"] {
        let out = dir.path().join(format!("exp1-{steps}.csv"));
        let o = out.to_str().unwrap();
        let status = run(&[
            "--fixture",
            "1",
            "landscape",
            "--mode",
            "analytic",
            "--beta-steps",
            steps,
            "--gamma-steps",
            steps,
            "--out",
            o,
        ]);
        assert!(status.status.success());
        let (header, rows) = read_csv(&out);
        assert_eq!(header, ["beta", "gamma", "energy"]);
        let n: usize = steps.parse().unwrap();
        assert_eq!(rows.len(), n * n);
        // row-major: gamma varies fastest
        assert_eq!(rows[1][0], 0.0);
        assert!(rows[1][1] > 0.0);
        let min = rows.iter().map(|r| r[2]).fold(f64::INFINITY, f64::min);
        assert!(min >= -1.0);
        assert!(min <= last_min);
        last_min = min;

        let meta: Value =
            serde_json::from_slice(&fs::read(format!("{o}.meta.json")).unwrap()).unwrap();
        assert_eq!(meta["provenance"]["mode"], "analytic");
        assert_eq!(meta["grid"]["rows"], n);
        assert_eq!(meta["grid"]["betaRange"][1], round_sig(PI));
    }
    assert!(last_min < -0.999);
}

#[test]
fn exact_simulation_matches_analytic_landscape() {
    let dir = tempfile::tempdir().unwrap();
    let exact = dir.path().join("exact.csv");
    let analytic = dir.path().join("analytic.csv");
    for (mode, path) in [("exact-sim", &exact), ("analytic", &analytic)] {
        let out = run(&[
            "--fixture",
            "7",
            "landscape",
            "--mode",
            mode,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let (_, a) = read_csv(&exact);
    let (_, b) = read_csv(&analytic);
    assert_eq!(a.len(), 64 * 128);
    let worst = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x[2] - y[2]).abs())
        .fold(0.0, f64::max);
    assert!(worst <= 1e-9, "{worst}");
}

#[test]
fn sampled_landscape_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--fixture",
        "33",
        "landscape",
        "--mode",
        "sampled",
        "--shots",
        "2048",
        "--seed",
        "7",
    ];
    let mut files = Vec::new();
    for name in ["a.csv", "b.csv", "c.csv"] {
        let path = dir.path().join(name);
        let seed_args: Vec<&str> = if name == "c.csv" {
            args.iter()
                .map(|&a| if a == "7" { "8" } else { a })
                .collect()
        } else {
            args.to_vec()
        };
        let mut full = seed_args;
        full.extend(["--out", path.to_str().unwrap()]);
        assert!(run(&full).status.success());
        files.push(fs::read(&path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert_ne!(files[0], files[2]);
    let meta: Value =
        serde_json::from_slice(&fs::read(dir.path().join("a.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(
        meta["provenance"],
        serde_json::json!({"mode": "sampled", "shots": 2048, "seed": 7})
    );
}

#[test]
fn all_fixture_metrics() {
    let rows = json(&["--all-fixtures", "metrics"]);
    let rows = rows.as_array().unwrap();
    let sparsity: Vec<f64> = rows
        .iter()
        .map(|r| r["sparsity"].as_f64().unwrap())
        .collect();
    assert_eq!(sparsity, [0.92, 0.84, 0.76, 0.76, 0.68, 0.44, 0.52, 0.20]);
    for r in rows {
        assert_eq!(r["grid"]["rows"], 128);
        assert_eq!(r["periodicClosure"], true);
        assert_eq!(r["provenance"]["mode"], "analytic");
    }
}

#[test]
fn two_edge_star_is_smoother_than_k4() {
    let tv = |id: &str| {
        json(&["--fixture", id, "metrics"])["totalVariation"]
            .as_f64()
            .unwrap()
    };
    assert!(tv("2") < tv("23"));
}

#[test]
fn metrics_csv() {
    let out = run(&["--all-fixtures", "metrics", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[0].starts_with("experiment,graph6,sparsity,totalVariation"));
    assert!(lines[8].starts_with("33,D~{,0.2,"));
}

#[test]
fn single_edge_exact_optimization() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.csv");
    let out = run(&[
        "--fixture",
        "1",
        "optimize",
        "--exact",
        "--max-iter",
        "1000",
        "--seed",
        "1",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["bestExpectation"].as_f64().unwrap() <= -0.95);
    assert_eq!(v["bruteForceOptimum"], -1);
    assert_eq!(v["seed"], 1);
    assert_eq!(v["objective"]["mode"], "exact-sim");
    assert_eq!(v["hyperparameters"]["a"], 0.2);
    assert_eq!(v["hyperparameters"]["maxIter"], 1000);
    assert_eq!(v["evaluations"], 2002);
    assert_eq!(v["trace"].as_array().unwrap().len(), 1001);
    let (header, rows) = read_csv(&trace);
    assert_eq!(header, ["iter", "beta", "gamma", "estimate"]);
    assert_eq!(rows.len(), 1001);
    assert_eq!(rows[1000][0], 1000.0);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("brute-force optimum -1"), "{stderr}");
}

#[test]
fn sampled_optimization_reports_brute_force_optimum() {
    let v = json(&[
        "--fixture",
        "13",
        "optimize",
        "--shots",
        "2048",
        "--max-iter",
        "1000",
        "--seed",
        "3",
    ]);
    assert_eq!(v["bruteForceOptimum"], -4);
    assert_eq!(v["maxCut"], 4);
    assert_eq!(v["objective"]["shots"], 2048);
    assert!(v["bestExactExpectation"].as_f64().unwrap() < -2.85);
}

#[test]
fn optimizer_overrides_are_recorded() {
    let v = json(&[
        "--fixture",
        "2",
        "optimize",
        "--max-iter",
        "20",
        "--init",
        "center",
        "--spsa-a",
        "0.5",
        "--spsa-c",
        "0.2",
        "--spsa-stability",
        "5",
    ]);
    assert_eq!(v["init"], "center");
    assert_eq!(v["hyperparameters"]["a"], 0.5);
    assert_eq!(v["hyperparameters"]["c"], 0.2);
    assert_eq!(v["hyperparameters"]["stability"], 5.0);
    assert_eq!(v["initialParams"]["beta"], round_sig(PI / 4.0));
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &[
            "--fixture",
            "13",
            "optimize",
            "--shots",
            "2048",
            "--max-iter",
            "1000",
        ],
        &["--fixture", "1", "landscape", "--mode", "sampled"],
        &["--fixture", "1", "--graph6", "A?", "hamiltonian"],
        &["--fixture", "99", "hamiltonian"],
        &["hamiltonian"],
        &["--fixture", "1", "hamiltonian", "--format", "csv"],
        &[
            "--fixture",
            "1",
            "landscape",
            "--shots",
            "10",
            "--mode",
            "analytic",
        ],
        &[
            "--fixture",
            "1",
            "landscape",
            "--exact",
            "--mode",
            "sampled",
            "--seed",
            "1",
        ],
        &["--fixture", "1", "landscape", "--beta-steps", "1"],
        &["--fixture", "1", "optimize", "--max-iter", "0"],
        &["--all-fixtures", "optimize"],
        &["--record", "2", "graphs"],
        &["--fixture", "1", "frobnicate"],
        &["--fixture", "x", "hamiltonian"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn computation_errors_exit_with_one() {
    let out = run(&["--graph6", "D?@", "hamiltonian"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("byte 2"), "{msg}");

    let out = run(&["--graph6-file", "/nonexistent/set.g6", "hamiltonian"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("/nonexistent/set.g6"));
}

#[test]
fn graph6_dataset_ingestion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    fs::write(&path, ">>graph6<<D?_\nD~{\n\nDhc\n").unwrap();
    let p = path.to_str().unwrap();

    let listed = json(&["--graph6-file", p, "graphs"]);
    let listed = listed.as_array().unwrap();
    assert_eq!(listed.len(), 3);
    assert_eq!(listed[2]["graph6"], "Dhc");
    assert_eq!(listed[2]["edges"].as_array().unwrap().len(), 5);
    assert!(listed[2]["source"]
        .as_str()
        .unwrap()
        .ends_with("graphs.g6:4"));

    let k5 = json(&["--graph6-file", p, "--record", "1", "hamiltonian"]);
    assert_eq!(k5["sparsity"], "0.2");
    let c5 = json(&["--graph6-file", p, "--record", "2", "metrics"]);
    assert_eq!(c5["sparsity"], 0.6);
    assert_eq!(c5["delta"], 2);

    let out = run(&["--graph6-file", p, "--record", "3", "hamiltonian"]);
    assert_eq!(out.status.code(), Some(1));

    fs::write(&path, "D?_\nD?@\n").unwrap();
    let out = run(&["--graph6-file", p, "graphs"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("graphs.g6:2"), "{msg}");
}

#[test]
fn fixture_listing() {
    let v = json(&["graphs"]);
    let ids: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["experiment"].as_u64().unwrap())
        .collect();
    assert_eq!(ids, [1, 2, 3, 7, 13, 18, 23, 33]);
}

#[test]
fn landscape_json_format() {
    let v = json(&[
        "--fixture",
        "13",
        "landscape",
        "--format",
        "json",
        "--beta-steps",
        "4",
        "--gamma-steps",
        "8",
    ]);
    assert_eq!(v["meta"]["grid"]["cols"], 8);
    let energy = v["energy"].as_array().unwrap();
    assert_eq!(energy.len(), 4);
    assert_eq!(energy[0].as_array().unwrap().len(), 8);
    assert_eq!(energy[0][0], -2.0);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
