//! End-to-end runs of the `fibercone` binary, including golden JSON files.
//! Set `UPDATE_GOLDEN=1` to rewrite the golden files.

use std::path::PathBuf;
use std::process::{Command, Output};

const EXAMPLE: &str = "x^10, x^9 y^2, x^8 y^4, x^7 y^5, x^6 y^6, x^5 y^7, x^4 y^8, x^2 y^9, y^10";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibercone")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&out), expected, "{name} differs from golden output");
}

#[test]
fn fiber_golden() {
    golden("fiber_example.json", &["fiber", EXAMPLE, "--json"]);
}

#[test]
fn symmetric_golden() {
    golden("symmetric_3_4_7.json", &["symmetric", "--a", "3", "--b", "4", "--c", "7", "--json"]);
}

#[test]
fn scan_golden() {
    golden("scan_5_9_15.json", &["scan", "--amax", "5", "--bmax", "9", "--cmax", "15", "--json"]);
}

#[test]
fn fiber_text_report() {
    let out = stdout(&run(&["fiber", EXAMPLE]));
    assert!(out.contains("relations:   28"));
    assert!(out.contains("numerator [1, 7]"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["fiber", EXAMPLE, "--json"]))).unwrap();
    assert_eq!(json["presentation"]["initial_ideal"].as_array().unwrap().len(), 28);
    assert_eq!(json["hilbert"]["numerator"], serde_json::json!([1, 7]));
    assert_eq!(json["schema_version"], 1);
}

#[test]
fn symmetric_text_report() {
    assert!(stdout(&run(&["symmetric", "--a", "3", "--b", "4", "--c", "7"])).contains("CM_Equigen"));
    assert!(stdout(&run(&["symmetric", "--a", "2", "--b", "7", "--c", "8"])).contains("UnknownInterval"));
}

#[test]
fn scan_marks_the_open_interval() {
    let out = stdout(&run(&["scan", "--amax", "5", "--bmax", "9", "--cmax", "15"]));
    assert!(out.contains("??"));
    assert!(out.contains("UnknownInterval: "));
}

#[test]
fn analyze_and_probe_flags() {
    let args = ["analyze", "(9,0),(5,3),(3,5),(0,9)", "--json", "--seed", "7", "--trials", "2"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let json: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(json["verdict"], serde_json::json!({"EvidenceDepthAtLeast": 2}));
    assert_eq!(json["transcript"]["seed"], 7);
    assert_eq!(json["transcript"]["trials"].as_array().unwrap().len(), 2);
}

#[test]
fn powers_and_semigroup() {
    let out = stdout(&run(&["powers", "(8,0),(4,3),(3,4),(0,8)", "--k", "3", "--bound", "4"]));
    assert!(out.contains("no reduction number up to 4"));
    let out = stdout(&run(&["powers", "(7,0),(4,3),(3,4),(0,7)", "--k", "3"]));
    assert!(out.contains("reduction number r_J(I) = 3"));
    let out = stdout(&run(&["semigroup", "--gens", "3,4,6", "--apery", "6"]));
    assert!(out.contains("Ap(6) = {0, 3, 4, 7, 8, 11}"));
}

#[test]
fn normalize_flag_and_out_file() {
    let out = run(&["analyze", "x^3 y, x y^3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = stdout(&run(&["analyze", "x^3 y, x y^3", "--normalize"]));
    assert!(out.contains("divided by x*y"));

    let dir = std::env::temp_dir().join(format!("fibercone-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let out = run(&["symmetric", "--a", "3", "--b", "4", "--c", "6", "--json", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert!(std::fs::read_to_string(&file).unwrap().contains("CM_SmallC"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        &["analyze", "x^2, z"][..],
        &["symmetric", "--a", "2", "--b", "4", "--c", "6"],
        &["semigroup", "--gens", "4,6"],
        &["fiber", EXAMPLE, "--prime", "12"],
        &["fiber", EXAMPLE, "--kmax", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
}
