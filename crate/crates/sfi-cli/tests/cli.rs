//! End-to-end behavior of the `sfi` binary: output contracts, exit codes,
//! environment handling.

mod common;

use common::{run_sfi, stdout_of};
use sfi_cli::output::parse_csv;

fn field_of(csv: &str, column: &str) -> f64 {
    let table = parse_csv(csv).expect("parsable csv");
    let idx = table.columns.iter().position(|c| c == column).expect("column");
    match &table.rows[0][idx] {
        sfi_cli::output::Cell::F64(v) => *v,
        other => panic!("column {column} not a float: {other:?}"),
    }
}

#[test]
fn rate_reports_benchmark_gammas() {
    let low = stdout_of(&["--wavelength-nm", "800", "--intensity", "1e13", "rate"]);
    assert!((field_of(&low, "gamma") - 3.376).abs() <= 0.002);
    let high = stdout_of(&["--wavelength-nm", "800", "--intensity", "6e14", "rate"]);
    assert!((field_of(&high, "gamma") - 0.4357).abs() <= 0.0005);
}

#[test]
fn rate_even_in_k_par_sign() {
    let plus = stdout_of(&["--intensity", "6e14", "rate", "--kpar", "0.3"]);
    let minus = stdout_of(&["--intensity", "6e14", "rate", "--kpar", "-0.3"]);
    assert_eq!(field_of(&plus, "f"), field_of(&minus, "f"));
    assert_eq!(field_of(&plus, "log_rate"), field_of(&minus, "log_rate"));
}

#[test]
fn ip_ev_matches_ip_au() {
    let ev = stdout_of(&["--ip-ev", "27.211386", "rate"]);
    let au = stdout_of(&["--ip-au", "1.0", "rate"]);
    assert_eq!(field_of(&ev, "gamma"), field_of(&au, "gamma"));
}

#[test]
fn json_format_well_formed() {
    let text = stdout_of(&["--format", "json", "rate", "--kpar", "0.1"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["meta"]["schema_version"], 1);
    assert_eq!(doc["columns"][0], "omega_au");
    assert!(doc["rows"][0].as_array().unwrap().len() >= 11);
}

#[test]
fn csv_round_trip_of_real_output() {
    let text = stdout_of(&["--intensity", "6e14", "spectrum", "--npar", "5", "--nperp", "3"]);
    let reparsed = parse_csv(&text).unwrap();
    assert_eq!(reparsed.to_csv(), text);
}

#[test]
fn parameter_errors_exit_2() {
    let out = run_sfi(&["--intensity", "-1", "rate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_sfi(&["--wavelength-nm", "0", "rate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_sfi(&["--ip-au", "0", "rate"]);
    assert_eq!(out.status.code(), Some(2));
    // degenerate grid
    let out = run_sfi(&["spectrum", "--npar", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_3() {
    let out = run_sfi(&["rate", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oracle_check_passes_with_exit_0() {
    let out = run_sfi(&["oracle-check", "--n", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("max_rel_dev"));
    assert!(text.contains("true"));
}

#[test]
fn out_dir_env_resolves_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_sfi"))
        .args(["rate", "--out", "r.csv"])
        .env("SFI_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("r.csv").exists());
}

#[test]
fn limits_table_has_all_defined_rows() {
    // at small momenta the high-energy limit is undefined and skipped
    let text = stdout_of(&["--intensity", "6e14", "limits", "--kpar", "0.1", "--kperp", "0.1"]);
    for name in [
        "keldysh",
        "corkum_parallel",
        "delone_perp",
        "ivanov_perp_small",
        "krainov_asymptotic",
        "perp_asymptotic",
        "ppt_expansion",
    ] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
    assert!(!text.contains("krainov_high_energy"));
    // above the 4 Up threshold the high-energy row appears
    let text = stdout_of(&["--intensity", "6e14", "limits", "--kpar", "4.0", "--kperp", "0.1"]);
    assert!(text.contains("krainov_high_energy"));
}

#[test]
fn spectrum_matches_defaults_documented() {
    let text = stdout_of(&["spectrum", "--npar", "3", "--nperp", "2"]);
    let table = parse_csv(&text).unwrap();
    assert_eq!(table.rows.len(), 6);
    // default window is +-1.5 sqrt(2 Ip) along k_par
    assert_eq!(field_of(&text, "k_par"), -1.5);
}
