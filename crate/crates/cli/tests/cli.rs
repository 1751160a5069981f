//! End-to-end tests against the built binary.

use std::process::{Command, Output};

fn chiruns(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chiruns"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn measure_worked_examples() {
    let out = chiruns(&["measure", "aabaa", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["chi"], 3);
    assert_eq!(v["rows"][0]["n"], 5);

    let out = chiruns(&["measure", "332222111", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["chi"], 6);
    assert_eq!(v["rows"][0]["r"], 4);
    assert_eq!(v["rows"][0]["ratio_num"], 3);
    assert_eq!(v["rows"][0]["ratio_den"], 2);

    let out = chiruns(&["measure", "a", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["r"], 2);
    assert_eq!(v["rows"][0]["r_c"], 1);
}

#[test]
fn measure_rejects_bad_input() {
    let out = chiruns(&["measure", ""]);
    assert_eq!(out.status.code(), Some(2));

    // declared binary alphabet, non-binary byte
    let out = chiruns(&["measure", "012", "--alphabet", "binary"]);
    assert_eq!(out.status.code(), Some(2));

    // the sentinel byte is reserved
    let out = chiruns(&["measure", "ab$"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn measure_oracle_mode() {
    let out = chiruns(&["measure", "aabaa", "--oracle"]);
    assert!(out.status.success());

    // oracle refuses beyond its cap
    let big = "ab".repeat(300);
    let out = chiruns(&["measure", &big, "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
    // but the fast path handles it
    let out = chiruns(&["measure", &big]);
    assert!(out.status.success());
}

#[test]
fn gen_examples() {
    let out = chiruns(&["gen", "runmin", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("00010111"));
    let prov: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(prov["expected"]["r_c"], 6);
    assert_eq!(prov["expected"]["r"], 8);
    assert_eq!(prov["expected"]["chi"], 9);

    let out = chiruns(&["gen", "clustered", "--sigma", "2", "--exponents", "2,2"]);
    assert!(stdout(&out).starts_with("1100\n"));

    let out = chiruns(&["gen", "debruijn", "--sigma", "3", "--k", "2"]);
    assert!(stdout(&out).starts_with("001021122\n"));

    // polynomial input, both notations
    let caret = chiruns(&["gen", "debruijn", "--k", "4", "--poly", "x^4+x+1"]);
    let hex = chiruns(&["gen", "debruijn", "--k", "4", "--poly", "0x13"]);
    assert!(caret.status.success());
    assert_eq!(stdout(&caret), stdout(&hex));
}

#[test]
fn gen_rejects_invalid_parameters() {
    // not primitive
    let out = chiruns(&["gen", "runmin", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // exponent below two
    let out = chiruns(&["gen", "clustered", "--sigma", "2", "--exponents", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
    // big order without --big
    let out = chiruns(&["gen", "runmin", "--k", "22"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_runmin_rows() {
    let out = chiruns(&["verify", "runmin", "--max-k", "7", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,k,sigma,n,chi,r,r_bar,r_c,sre,ratio_num,ratio_den,pass"
    );
    let ks: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(ks, ["2", "3", "4", "6", "7"]);
}

#[test]
fn verify_all_passes_quickly() {
    let out = chiruns(&[
        "verify",
        "all",
        "--max-sigma",
        "4",
        "--max-k",
        "4",
        "--count",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["rows"].as_array().unwrap().len() > 10);
}

#[test]
fn sweep_is_deterministic_per_seed() {
    let args = ["sweep", "--max-sigma", "5", "--count", "4", "--seed", "7", "--format", "json"];
    let a = chiruns(&args);
    let b = chiruns(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let c = chiruns(&[
        "sweep", "--max-sigma", "5", "--count", "4", "--seed", "8", "--format", "json",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn csv_output_is_deterministic() {
    let args = ["verify", "clustered", "--max-sigma", "4", "--count", "5", "--format", "csv"];
    let a = chiruns(&args);
    let b = chiruns(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn conjecture_small_order() {
    let out = chiruns(&["conjecture", "--k", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let detail = &v["detail"];
    assert_eq!(detail["scan"]["valid_positions"][0], 1);
    assert_eq!(detail["scan"]["recovered"][0], "00010111$");
    assert_eq!(detail["census"]["total_cycles"], 2);
    assert_eq!(detail["census"]["consistency_ok"], true);
}

#[test]
fn conjecture_beyond_census_cap_still_scans() {
    let out = chiruns(&["conjecture", "--k", "6", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["detail"]["census"].is_null());
    assert!(v["detail"]["scan"]["valid_positions"].is_array());
}

#[test]
fn measure_reads_files() {
    let dir = std::env::temp_dir().join("chiruns-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("word.txt");
    std::fs::write(&path, b"banana").unwrap();
    let out = chiruns(&["measure", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["n"], 6);
    assert_eq!(v["rows"][0]["sigma"], 3);
}
