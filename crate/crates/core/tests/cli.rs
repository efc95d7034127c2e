use std::fs;
use std::process::Command;

use cubefree::cli::run;
use cubefree::report::{Format, Render};
use cubefree::{corollary_build, search_overlapfree_uniform, Morphism};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cubefree"))
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
fn build_15_prints_images_and_verdict() {
    let (code, stdout, _) = bin(&["build", "15"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("0 -> 01011"));
    assert!(lines[1].starts_with("1 -> 01011"));
    assert_eq!(lines[2], "verified: keranen pass");
}

#[test]
fn check_cube_reports_occurrence() {
    let (code, stdout, _) = bin(&["check", "--cube", "000"]);
    assert_eq!(code, 1);
    assert_eq!(stdout, "cube at (0, 1)\n");
    let (code, stdout, _) = bin(&["check", "--square", "0102010"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "squarefree\n");
    let (code, _, _) = bin(&["check", "--overlap", "01010"]);
    assert_eq!(code, 1);
}

#[test]
fn tm_prints_prefix() {
    let (code, stdout, _) = bin(&["tm", "16"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0110100110010110\n");
    let (_, json, _) = bin(&["tm", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["prefix"], "0110");
}

#[test]
fn usage_error_exit_code() {
    let (code, _, stderr) = bin(&["build", "fifteen"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("fifteen"));
    let (code, _, stderr) = bin(&["verify", "/nonexistent/morphism.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("/nonexistent/morphism.json"));
}

#[test]
fn build_then_verify_for_every_width_up_to_128() {
    let dir = tempfile::tempdir().unwrap();
    for k in 0..=128usize {
        let built = run(["--format", "json", "build", &k.to_string()]);
        assert_eq!(built.code, 0, "k = {k}");
        let path = dir.path().join(format!("m{k}.json"));
        fs::write(&path, &built.stdout).unwrap();
        let verified = run(["verify", path.to_str().unwrap()]);
        assert_eq!(verified.code, 0, "k = {k}: {}", verified.stdout);
        assert!(verified.stdout.contains("verified: yes"));
    }
    // and once through the real binary, with the brute-force oracle
    let path = dir.path().join("m15.json");
    let (code, stdout, _) = bin(&["verify", path.to_str().unwrap(), "--brute", "7"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("brute(7): pass"));
}

#[test]
fn verify_failure_exits_1_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, Morphism::binary("01", "01").unwrap().to_file_json()).unwrap();
    let (code, stdout, _) = bin(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(
        stdout.contains("keranen: fail: h(001) = 010101 contains cube at (0, 2)"),
        "{stdout}"
    );
    let (code, json, _) = bin(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["keranen"]["counterexample"]["input"], "001");
}

#[test]
fn outputs_match_library_serialization() {
    let h = corollary_build(12).unwrap();
    assert_eq!(
        run(["--format", "json", "build", "12"]).stdout,
        h.to_file_json()
    );
    let report = search_overlapfree_uniform(4).unwrap();
    assert_eq!(
        run(["search", "overlapfree", "4", "--format", "json"]).stdout,
        report.render(Format::Json)
    );
    assert_eq!(
        run(["search", "overlapfree", "4"]).stdout,
        report.render(Format::Plain)
    );
}

#[test]
fn witness_subcommand() {
    let (code, stdout, _) = bin(&["witness", "lemma1", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0y0: 0010 0100\n0z1: 0101 0011\n");
    let (code, stdout, _) = bin(&["witness", "lemma3", "9"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "00x11: 001001011 001010011\n");
    let (_, json, _) = bin(&["witness", "lemma2", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pairs"][0]["first"], "0100101");
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn search_writes_csv_census() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("census.csv");
    for width in ["1", "2", "3"] {
        let (code, _, _) = bin(&[
            "search",
            "overlapfree",
            width,
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let text = fs::read_to_string(&csv).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], vec!["width", "examined", "found", "seconds"]);
    assert_eq!(rows.len(), 4);
    assert_eq!(&rows[2][..3], &["2", "16", "2"]);
    assert_eq!(&rows[3][..3], &["3", "64", "0"]);
    rows[3][3].parse::<f64>().unwrap();
}

#[test]
fn search_output_is_deterministic() {
    let a = bin(&["search", "squarefree3", "11", "--first"]);
    let b = bin(&["search", "squarefree3", "11", "--first"]);
    assert_eq!(a, b);
    assert!(a.1.contains("[stopped at first]"));
    let (code, _, _) = bin(&["search", "squarefree3", "13"]);
    assert_eq!(code, 2);
}

#[test]
fn expand_applies_and_iterates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("phi3.json");
    fs::write(&path, corollary_build(3).unwrap().to_file_json()).unwrap();
    let p = path.to_str().unwrap();
    let (code, stdout, _) = bin(&["expand", p, "001"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "001001011\n");
    let (code, stdout, _) = bin(&["expand", p, "--iterate", "0", "9"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "001001011\n");
    let (code, _, stderr) = bin(&["expand", p, "--iterate", "1", "9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not prolongable"));
    let (code, _, _) = bin(&["expand", p, "012"]);
    assert_eq!(code, 2);
}
