//! Golden-file regression tests: the `verify` binary must reproduce the
//! stored reports byte for byte, and the exit-code contract must hold.

use std::path::Path;
use std::process::Command;

fn verify_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verify"))
}

fn tables_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tables"))
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {:?}: {}", path, e))
}

fn run_verify_to_file(args: &[&str]) -> (std::process::Output, String) {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let output = verify_bin()
        .args(args)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    let contents = std::fs::read_to_string(&out_path).unwrap_or_default();
    (output, contents)
}

#[test]
fn a2_report_matches_golden_byte_for_byte() {
    let args = ["--type", "A", "--rank", "2", "--ht-max", "4", "--words", "all", "--check", "all"];
    let (output, contents) = run_verify_to_file(&args);
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(contents, golden("a2_ht4.json"));
    // Same config again: byte-identical.
    let (_, again) = run_verify_to_file(&args);
    assert_eq!(contents, again);
}

#[test]
fn a3_report_matches_golden_byte_for_byte() {
    let args = ["--type", "A", "--rank", "3", "--ht-max", "4", "--words", "all", "--check", "all"];
    let (output, contents) = run_verify_to_file(&args);
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    assert_eq!(contents, golden("a3_ht4.json"));
}

#[test]
fn usage_errors_exit_with_code_2() {
    for args in [
        vec!["--type", "B", "--rank", "2"],
        vec!["--type", "A", "--rank", "9"],
        vec!["--type", "A", "--rank", "2", "--check", "frobnicate"],
        vec!["--type", "A", "--rank", "2", "--beta", "1"],
        vec!["--type", "A", "--rank", "2", "--words", "1,2"],
        vec!["--type", "A", "--rank", "2", "--format", "yaml"],
        vec!["--rank", "2"],
    ] {
        let output = verify_bin().args(&args).output().unwrap();
        assert_eq!(
            output.status.code(),
            Some(2),
            "args {:?}, stderr: {}",
            args,
            String::from_utf8_lossy(&output.stderr)
        );
    }
}

#[test]
fn tables_prints_the_worked_a2_values() {
    let output = tables_bin()
        .args(["--type", "A", "--rank", "2", "--beta", "1,1", "--word", "1,2,1", "--format", "csv"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    // [P:~E] = [[1, 0], [t, 1]] with data order (1,0,1) before (0,1,0).
    assert!(text.contains("matrix,P:E~"), "output: {}", text);
    assert!(text.contains("\"1,0,1\",1,0"), "output: {}", text);
    assert!(text.contains("\"0,1,0\",t,1"), "output: {}", text);
    // [E:L] is the transpose of [P:~E].
    assert!(text.contains("matrix,E:L"), "output: {}", text);
    assert!(text.contains("\"1,0,1\",1,t"), "output: {}", text);

    let bad = tables_bin()
        .args(["--type", "A", "--rank", "2", "--beta", "1,1", "--word", "1,2", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn csv_and_latex_formats_render() {
    for fmt in ["csv", "latex"] {
        let output = verify_bin()
            .args(["--type", "A", "--rank", "2", "--ht-max", "2", "--check", "determinant", "--format", fmt])
            .output()
            .unwrap();
        assert!(output.status.success());
        let text = String::from_utf8(output.stdout).unwrap();
        assert!(text.contains("determinant"), "{} output: {}", fmt, text);
    }
}
