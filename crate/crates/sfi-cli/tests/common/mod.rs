#![allow(dead_code)] // each test binary uses a different subset

//! Shared helpers for the CLI integration and acceptance tests.

use std::process::Output;

/// Run the `sfi` binary with the given arguments.
pub fn run_sfi(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_sfi"))
        .args(args)
        .env_remove("SFI_OUT_DIR")
        .output()
        .expect("binary runs")
}

pub fn stdout_of(args: &[&str]) -> String {
    let out = run_sfi(args);
    assert!(
        out.status.success(),
        "sfi {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

/// The pinned figure-data commands behind the committed golden files.
pub fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        (
            "fig1_spectrum_1e13.csv",
            vec!["--intensity", "1e13", "spectrum", "--npar", "41", "--nperp", "21", "--normalize"],
        ),
        (
            "fig1_spectrum_6e14.csv",
            vec!["--intensity", "6e14", "spectrum", "--npar", "41", "--nperp", "21", "--normalize"],
        ),
        (
            "fig2_phase_scan_1e13.csv",
            vec!["--intensity", "1e13", "phase-scan", "--nphi", "91"],
        ),
        (
            "fig2_phase_scan_6e14.csv",
            vec!["--intensity", "6e14", "phase-scan", "--nphi", "91"],
        ),
        ("fig3_cut_1e13.csv", vec!["--intensity", "1e13", "cut", "--n", "101"]),
        ("fig3_cut_6e14.csv", vec!["--intensity", "6e14", "cut", "--n", "101"]),
    ]
}

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}
