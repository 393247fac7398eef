//! End-to-end tests of the command-line interface through the binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_janowski"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[test]
fn classify_reports_region() {
    let v = run_json(&["classify", "--A", "-0.5", "--B", "-1"]);
    assert_eq!(v["region"], "E3");
    assert_eq!(v["A"], -0.5);
    assert_eq!(v["B"], -1.0);
}

#[test]
fn norm_for_convex_class() {
    let v = run_json(&["norm", "--A", "1", "--B", "-1"]);
    assert_eq!(v["bound"], 2.0);
    assert_eq!(v["branch"], "Bm1");
    assert_eq!(v["region"], "E2");
    assert!(
        v.get("alpha").is_none(),
        "alpha must be absent off the gamma branch"
    );
    assert!(v.get("qc_constant").is_none(), "no qc constant at bound 2");
}

#[test]
fn norm_round_trip_over_order_family() {
    // (1-2a, -1) must produce max(2 for a <= 1/2, 8a(1-a) for a > 1/2).
    let mut alphas: Vec<f64> = (0..20).map(|k| k as f64 / 20.0).collect();
    alphas.push(0.999);
    for alpha in alphas {
        let a = 1.0 - 2.0 * alpha;
        let v = run_json(&["norm", "--A", &a.to_string(), "--B", "-1"]);
        let expected = if alpha <= 0.5 {
            2.0
        } else {
            8.0 * alpha * (1.0 - alpha)
        };
        let bound = v["bound"].as_f64().unwrap();
        assert!(
            (bound - expected).abs() <= 1e-12,
            "alpha = {alpha}: {bound} vs {expected}"
        );
    }
}

#[test]
fn bound_sample_for_convex_witness() {
    let v = run_json(&[
        "bound",
        "--A",
        "1",
        "--B",
        "-1",
        "--re",
        "0.5",
        "--psi-zeros",
        "0",
    ]);
    let s = v["S"].as_array().unwrap();
    assert!((s[0].as_f64().unwrap() - 32.0 / 9.0).abs() < 1e-14);
    assert_eq!(s[1].as_f64().unwrap(), 0.0);
    assert!((v["weighted"].as_f64().unwrap() - 2.0).abs() < 1e-14);
}

#[test]
fn bound_accepts_complex_zeros() {
    let v = run_json(&[
        "bound",
        "--A",
        "0.5",
        "--B",
        "-0.5",
        "--re",
        "0.3",
        "--im",
        "0.2",
        "--psi-zeros",
        "0.4,-0.1",
        "--psi-zeros",
        "-0.2",
    ]);
    assert!(v["weighted"].as_f64().unwrap() >= 0.0);
}

#[test]
fn extremal_reports_construction() {
    let v = run_json(&["extremal", "--A", "0.2", "--B", "-0.5", "--z0", "0.5"]);
    assert_eq!(v["p"], 1.0);
    assert_eq!(v["q"], 1.0);
    assert!((v["b"].as_f64().unwrap() - 0.3875 / 1.525).abs() < 1e-15);

    let p = janowski::JanowskiParams::new(0.2, -0.5).unwrap();
    let expected = janowski::extremal_weighted_value(&p, 0.5).unwrap();
    assert!((v["weighted"].as_f64().unwrap() - expected).abs() < 1e-15);

    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 33);
    assert_eq!(coeffs[0][0], 0.0);
    assert_eq!(coeffs[1][0], 1.0);
}

#[test]
fn coeffs_emits_csv() {
    let out = run(&[
        "coeffs", "--which", "K", "--A", "1", "--B", "-1", "--order", "5",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,re,im");
    assert_eq!(lines.len(), 7);
    for (n, line) in lines[1..].iter().enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], n.to_string());
        let re: f64 = fields[1].parse().unwrap();
        let expected = if n == 0 { 0.0 } else { 1.0 };
        assert_eq!(re, expected);
    }
}

#[test]
fn scan_emits_sorted_lossless_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = run(&["scan", "--grid", "50", "--out", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "scan failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "A,B,region,branch,bound,alpha,qc_constant,numeric_sup"
    );
    assert_eq!(lines.len(), 1 + 50 * 50);

    let mut region_counts = std::collections::HashMap::new();
    let mut prev_a = f64::NEG_INFINITY;
    for line in &lines[1..] {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8);

        // Losslessness: every populated numeric field reprints identically.
        for &idx in &[0usize, 1, 4, 5, 6, 7] {
            if fields[idx].is_empty() {
                continue;
            }
            let x: f64 = fields[idx].parse().unwrap();
            assert_eq!(fmt_f64(x), fields[idx], "field {idx} of {line}");
        }

        let a: f64 = fields[0].parse().unwrap();
        assert!(a >= prev_a, "rows sorted by A");
        prev_a = a;

        *region_counts.entry(fields[2].to_string()).or_insert(0usize) += 1;

        // alpha present iff the gamma(alpha) branch fired.
        assert_eq!(fields[3] == "GammaAlpha", !fields[5].is_empty(), "{line}");
    }
    assert_eq!(region_counts.values().sum::<usize>(), 2500);
    assert!(
        region_counts.len() == 3,
        "all regions appear: {region_counts:?}"
    );

    // Capping the worker count must not change the output.
    let path1 = dir.path().join("scan1.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_janowski"))
        .args(["scan", "--grid", "50", "--out", path1.to_str().unwrap()])
        .env("SCHWARZIAN_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(text, std::fs::read_to_string(&path1).unwrap());
}

#[test]
fn verify_passes_for_representatives() {
    for (a, b) in [("0.5", "0"), ("-0.5", "-1"), ("0.5", "-0.95"), ("1", "-1")] {
        let out = run(&[
            "verify", "--A", a, "--B", b, "--trials", "200", "--seed", "5", "--grid", "65,32",
        ]);
        assert!(
            out.status.success(),
            "verify ({a},{b}) failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["falsified"], false);
        assert!(v["dominance"]["max_violation"].as_f64().unwrap() <= 1e-9);
    }
}

#[test]
fn invalid_parameters_exit_2() {
    let out = run(&["norm", "--A", "0.5", "--B", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_arguments_exit_2() {
    let out = run(&["classify", "--bogus", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inadmissible_base_point_exit_2() {
    // (-0.5,-1) has annulus [1/3, 1]; z0 = 0.5 is inside it.
    let out = run(&["extremal", "--A", "-0.5", "--B", "-1", "--z0", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}
