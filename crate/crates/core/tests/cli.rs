use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::Command;

use minkowski_spectra::cli::{self, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("minkowski").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn json_records(text: &str) -> Vec<serde_json::Map<String, Value>> {
    let mut lines = text.lines();
    let head: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(head["record"], "header");
    lines
        .map(|l| match serde_json::from_str(l).unwrap() {
            Value::Object(m) => m,
            other => panic!("not an object: {other}"),
        })
        .collect()
}

fn csv_records(text: &str) -> Vec<BTreeMap<String, String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let head = r.headers().unwrap().clone();
    r.records()
        .map(|row| head.iter().map(String::from).zip(row.unwrap().iter().map(String::from)).collect())
        .collect()
}

fn column(records: &[serde_json::Map<String, Value>], name: &str) -> Vec<f64> {
    records.iter().map(|r| r[name].as_f64().unwrap()).collect()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn closed_coulomb_levels() {
    let recs = json_records(&ok(&["spectrum", "--system", "coulomb", "--closed", "--n", "0..=3"]));
    let e = column(&recs, "E_re");
    assert_eq!(e, vec![-2.0, -2.0 / 9.0, -0.08, -2.0 / 49.0]);
    for r in &recs {
        assert_eq!(r["schema_version"], 1);
        assert_eq!(r["command"], "spectrum");
        assert_eq!(r["hbar"], 1.0);
        assert_eq!(r["mass"], 1.0);
    }
}

#[test]
fn output_is_deterministic() {
    let argsets: [&[&str]; 3] = [
        &["spectrum", "--system", "coulomb", "--M", "1", "--E0", "-1", "--n", "-2..=2"],
        &["wavefunction", "--system", "coulomb", "--M", "1", "--g", "2", "--branch", "third", "--grid", "0.1,20,50"],
        &["verify", "spectra"],
    ];
    for args in argsets {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn json_and_csv_carry_the_same_numbers() {
    let args = ["phase", "--M", "1.5", "--g", "0.37"];
    let json = json_records(&ok(&args));
    let mut with_csv = args.to_vec();
    with_csv.extend(["--format", "csv"]);
    let csv = csv_records(&ok(&with_csv));
    assert_eq!(json.len(), csv.len());
    for (j, c) in json.iter().zip(&csv) {
        for (k, v) in j {
            if let Some(x) = v.as_f64() {
                let y: f64 = c[k].parse().unwrap();
                assert_eq!(x.to_bits(), y.to_bits(), "{k}");
            }
        }
    }
}

#[test]
fn config_file_with_flag_override() {
    let path = scratch("run.conf");
    std::fs::write(&path, "# closed levels\nsystem = coulomb\nclosed = true\nn = 0..=4\nformat = csv\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = csv_records(&ok(&["spectrum", "--config", p]));
    assert_eq!(from_file.len(), 5);
    let overridden = csv_records(&ok(&["spectrum", "--config", p, "--n", "2"]));
    assert_eq!(overridden.len(), 1);
    assert_eq!(overridden[0]["E_re"], "-0.08");
    let json = ok(&["spectrum", "--config", p, "--format", "json"]);
    assert_eq!(json_records(&json).len(), 5);
}

#[test]
fn unknown_config_key_is_a_usage_error() {
    let path = scratch("bad.conf");
    std::fs::write(&path, "sytem = coulomb\n").unwrap();
    let (code, _, err) = run(&["spectrum", "--config", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("sytem"), "{err}");
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("levels.json");
    let (code, stdout, _) = run(&["spectrum", "--system", "oscillator", "--closed", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.is_empty());
    let recs = json_records(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(column(&recs, "E_re"), vec![1.0, 3.0, 5.0, 7.0]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["spectrum", "--system", "coulomb", "--M", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "everything"]).0, EXIT_USAGE);
    assert_eq!(run(&["potential", "--system", "free", "--grid", "2,1,10"]).0, EXIT_USAGE);
    assert_eq!(run(&["--tol", "root", "verify", "duality"]).0, EXIT_USAGE);
    assert_eq!(run(&["phase", "--M", "0", "--g", "0.5"]).0, EXIT_NUMERIC);
    assert_eq!(run(&["verify", "duality"]).0, EXIT_OK);
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_minkowski");
    let good = Command::new(bin).args(["verify", "duality", "--format", "csv"]).output().unwrap();
    assert_eq!(good.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(good.stdout).unwrap().starts_with("schema_version,command,hbar,mass,"));
    let bad = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn free_effective_potential_is_inverse_square() {
    let recs = json_records(&ok(&["potential", "--system", "free", "--grid", "0.1,10,40", "--spacing", "log"]));
    for r in &recs {
        let x = r["r"].as_f64().unwrap();
        let mink = r["U_eff_minkowski"].as_f64().unwrap();
        assert!(mink < 0.0);
        assert!((mink * x * x + 0.125).abs() < 1e-15);
        assert_eq!(r["U_eff_euclidean"].as_f64().unwrap(), mink);
    }
}

#[test]
fn euclidean_oscillator_column_has_one_minimum() {
    let recs = json_records(&ok(&["potential", "--system", "oscillator", "--M", "1", "--grid", "0.2,3,2801"]));
    let r = column(&recs, "r");
    let eu = column(&recs, "U_eff_euclidean");
    let mk = column(&recs, "U_eff_minkowski");
    let minima: Vec<usize> = (1..eu.len() - 1).filter(|&i| eu[i] < eu[i - 1] && eu[i] < eu[i + 1]).collect();
    assert_eq!(minima.len(), 1);
    assert!((r[minima[0]] - 0.75f64.powf(0.25)).abs() < 2e-3);
    assert!(mk.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn third_solution_phase_matches_phase_command() {
    let m = 2.0;
    let gamma = json_records(&ok(&["phase", "--M", "2", "--g", "0.5"]))[0]["gamma"].as_f64().unwrap();
    let recs = json_records(&ok(&[
        "wavefunction", "--system", "coulomb", "--M", "2", "--g", "0.5", "--branch", "third", "--grid", "1e-6,1e-3,300",
        "--spacing", "log",
    ]));
    let (mut ss, mut cc, mut sc, mut ys, mut yc) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for r in &recs {
        let z = r["z"].as_f64().unwrap();
        let y = r["u_re"].as_f64().unwrap() / z.sqrt();
        let (s, c) = (m * z.ln()).sin_cos();
        ss += s * s;
        cc += c * c;
        sc += s * c;
        ys += y * s;
        yc += y * c;
    }
    let det = ss * cc - sc * sc;
    let phase = ((yc * ss - ys * sc) / det).atan2((ys * cc - yc * sc) / det);
    let d = (phase - gamma).rem_euclid(PI);
    assert!(d.min(PI - d) <= 1e-4, "{phase} vs {gamma}");
}

#[test]
fn oscillator_ground_state_is_gaussian() {
    let recs = json_records(&ok(&[
        "wavefunction", "--system", "oscillator", "--n", "0", "--grid", "0.1,3,30",
    ]));
    let rho = column(&recs, "r");
    let a = column(&recs, "u_abs");
    for i in 1..rho.len() {
        let want = (-(rho[i] * rho[i] - rho[0] * rho[0]) / 2.0).exp();
        assert!((a[i] / a[0] / want - 1.0).abs() < 1e-10, "rho={}", rho[i]);
    }
}
