//! End-to-end checks of the `fermigas` binary: determinism, CSV shape,
//! parse-back fidelity and error signalling.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fermigas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn identical_flags_give_byte_identical_csv() {
    let args = ["surface", "--n", "20", "--grid", "-4:4:41"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["bcs-gap", "--levels", "8", "--spacing", "1", "--grid", "0.2:2:10"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn surface_has_header_and_full_grid() {
    let csv = stdout(&["surface", "--n", "4", "--grid", "-1:1:5"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "xi,xi_prime,concurrence");
    assert_eq!(lines.len(), 1 + 25);
    // Diagonal points carry C = 1.
    for line in &lines[1..] {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        if v[0] == v[1] {
            assert!((v[2] - 1.0).abs() <= 1e-12);
        }
        assert!((-1e-12..=1.0 + 1e-12).contains(&v[2]));
    }
}

#[test]
fn line_peaks_at_the_fixed_atom() {
    let csv = stdout(&["line", "--n", "10", "--x0", "0.5", "--grid", "-3:4:201"]);
    let mut best = (f64::NAN, f64::NEG_INFINITY);
    for line in csv.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        if v[1] > best.1 {
            best = (v[0], v[1]);
        }
    }
    assert_eq!(best.0, 0.5);
    assert!((best.1 - 1.0).abs() <= 1e-12);
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.csv");
    let on_stdout = stdout(&["line", "--n", "4", "--x0", "0.5", "--grid", "-2:2:21"]);
    let out = run(&[
        "line", "--n", "4", "--x0", "0.5", "--grid", "-2:2:21", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), on_stdout);
}

#[test]
fn distance_reports_the_bracket_and_respects_errors() {
    let csv = stdout(&["distance", "--n", "20", "--x0", "0"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "x0,l_star,bracket_lo,bracket_hi,iterations,first_revival"
    );
    let cells: Vec<&str> = lines[1].split(',').collect();
    let l_star: f64 = cells[1].parse().unwrap();
    assert!((l_star - 0.3094).abs() < 1e-3);

    // Two atoms: infinite distance is an error, not a row.
    let out = run(&["distance", "--n", "2", "--x0", "0"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr).to_lowercase();
    assert!(err.contains("maximally entangled"), "stderr: {err}");

    // Odd counts are rejected.
    let out = run(&["distance", "--n", "21", "--x0", "0"]);
    assert!(!out.status.success());
}

#[test]
fn bcs_y_scan_shows_the_threshold() {
    let csv = stdout(&[
        "bcs-y", "--levels", "8", "--spacing", "1", "--coupling", "1",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "y_abs2,concurrence,ppt_entangled,min_pt_eigenvalue"
    );
    let mut last_zero = f64::NAN;
    let mut first_one = f64::NAN;
    for line in &lines[1..] {
        let cells: Vec<&str> = line.split(',').collect();
        let y2: f64 = cells[0].parse().unwrap();
        let c: f64 = cells[1].parse().unwrap();
        if c == 0.0 {
            last_zero = y2;
        }
        if c == 1.0 && first_one.is_nan() {
            first_one = y2;
        }
        // The PPT columns empty out past Q/M = 0.5, where the matrix stops
        // being a state.
        if y2 > 0.5 + 1e-9 {
            assert_eq!(cells[2], "");
            assert_eq!(cells[3], "");
        } else {
            let flag: i64 = cells[2].parse().unwrap();
            assert_eq!(flag == 1, c > 0.0, "y2 = {y2}");
        }
    }
    // Q = 4, M = 8: zero until 0.25, saturated from 0.5 on.
    assert!((last_zero - 0.25).abs() < 0.02, "last zero at {last_zero}");
    assert!((first_one - 0.5).abs() < 0.02, "first one at {first_one}");
}

#[test]
fn bcs_gap_two_level_value() {
    let csv = stdout(&[
        "bcs-gap", "--levels", "2", "--spacing", "1", "--grid", "0.9999999:1.0000001:3",
    ]);
    let line = csv.lines().nth(2).unwrap(); // the middle row: lambda = 1
    let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
    assert!((v[1] - 0.75_f64.sqrt()).abs() < 1e-6, "delta = {}", v[1]);
    assert!((v[2] - 1.0).abs() < 1e-12, "q = {}", v[2]);
}

#[test]
fn oracle_check_passes_for_small_systems_and_refuses_large() {
    for n in ["2", "3", "4", "7", "8", "9"] {
        let out = run(&["oracle-check", "--n", n, "--grid", "-1:1:3"]);
        assert!(out.status.success(), "N = {n}");
    }
    let out = run(&["oracle-check", "--n", "10", "--grid", "-1:1:3"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr).to_lowercase();
    assert!(err.contains("brute-force"), "stderr: {err}");
}

#[test]
fn malformed_grid_is_a_usage_error() {
    let out = run(&["surface", "--n", "4", "--grid", "oops"]);
    assert!(!out.status.success());
    let out = run(&["surface", "--n", "4", "--grid", "2:1:5"]);
    assert!(!out.status.success());
}

#[test]
fn unwritable_out_path_fails_with_the_path_in_the_message() {
    let out = run(&[
        "line", "--n", "4", "--x0", "0", "--grid", "-1:1:5", "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("/nonexistent-dir/x.csv"), "stderr: {err}");
}

#[test]
fn emitted_floats_parse_back_to_full_precision() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("surface.csv");
    let path_str = path.to_str().unwrap();
    stdout_to_file(&["surface", "--n", "14", "--grid", "-2:2:9", "--out", path_str]);
    let text = std::fs::read_to_string(&path).unwrap();
    // Recompute each concurrence and compare against the parsed value.
    let cfg = fermigas_core::trap::TrapConfiguration::new(14).unwrap();
    for line in text.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        let k = fermigas_core::trap::PairKernels::evaluate(&cfg, v[0], v[1]).unwrap();
        let expect = fermigas_core::entanglement::concurrence_pair(&k)
            .unwrap()
            .value();
        assert!((v[2] - expect).abs() <= 1e-12, "row {line}");
    }
}

fn stdout_to_file(args: &[&str]) {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn help_lists_all_subcommands() {
    let help = stdout(&["--help"]);
    for sub in ["surface", "line", "distance", "bcs-y", "bcs-gap", "oracle-check"] {
        assert!(help.contains(sub), "missing {sub}");
    }
}
