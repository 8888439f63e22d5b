use std::process::Command;

use bohr_radius::output::{OutputRecord, RecordValue};

fn bohr(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bohr"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn scalar_json_round_trips() {
    let (code, stdout, _) = bohr(&["scalar", "--p", "2", "--q", "5", "--json"]);
    assert_eq!(code, 0);
    let rec = OutputRecord::from_json(stdout.trim()).unwrap();
    assert_eq!(rec.case, "Ple2_Qgt2_exact");
    match rec.value {
        RecordValue::Exact { value } => assert!((value - 0.5f64.sqrt()).abs() < 1e-12),
        other => panic!("{other:?}"),
    }
}

#[test]
fn interval_prints_both_endpoints() {
    let (code, stdout, _) = bohr(&["scalar", "--p", "1", "--q", "3"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("in [0.67565") && stdout.contains("0.707106781187]"),
        "{stdout}"
    );
}

#[test]
fn invalid_parameters_exit_two() {
    let (code, _, stderr) = bohr(&["scalar", "--p", "0.2", "--q", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("invalid exponents"));
    assert_eq!(bohr(&["hilbert", "--p", "1", "--q", "1", "--n", "2"]).0, 2);
    assert_eq!(
        bohr(&[
            "sweep",
            "--p-range",
            "2:1",
            "--q-range",
            "1:2",
            "--step",
            "0.5"
        ])
        .0,
        2
    );
    assert_eq!(bohr(&["frobnicate"]).0, 2);
}

#[test]
fn verify_reports_json() {
    let (code, stdout, _) = bohr(&[
        "verify",
        "schur_random",
        "--seed",
        "1",
        "--samples",
        "20",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["suite"], "schur_random");
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert!(v["failures"].as_array().unwrap().is_empty());
    assert!(v["seconds"].as_f64().is_some());
    assert_eq!(bohr(&["verify", "schur_random", "--samples", "0"]).0, 2);
}

#[test]
fn verify_all_gate() {
    let (code, stdout, _) = bohr(&["verify", "all", "--seed", "1", "--samples", "500"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.starts_with("PASS all"));
}

#[test]
fn sweep_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let (code, _, stderr) = bohr(&[
        "sweep",
        "--p-range",
        "1:3",
        "--q-range",
        "1:4",
        "--step",
        "0.5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{stderr}");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "p,q,kind,value,lo,hi,case,argmin_a");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5 * 7);
    assert!(rows[0].starts_with("1,1,exact,"));
    assert!(rows[1].starts_with("1,1.5,"));
    assert!(rows.iter().any(|r| r.contains(",interval,")));
}

#[test]
fn positive_real_and_pbohr() {
    let (_, stdout, _) = bohr(&["positive-real", "--p", "2", "--n", "7"]);
    assert!(stdout.contains("0.654653670708"), "{stdout}");
    let (_, stdout, _) = bohr(&["pbohr", "--p", "2", "--n", "3", "--ip", "1", "--json"]);
    let rec = OutputRecord::from_json(stdout.trim()).unwrap();
    assert_eq!(rec.value, RecordValue::Interval { lo: 0.2, hi: 1.0 });
    assert_eq!(rec.n, Some(3));
}
