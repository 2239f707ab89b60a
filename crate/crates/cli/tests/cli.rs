use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn gamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn count_only_prints_kalmar_number() {
    let out = gamma(&["decompose", "--count-only", "z^12 + z^13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "8");
}

#[test]
fn right_solve_of_monomials() {
    let out = gamma(&["solve", "right", "z^8", "z^2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let coeffs = v["solutions"][0]["x"]["coeffs"].as_array().unwrap();
    for (i, c) in coeffs.iter().enumerate() {
        assert_eq!(c, if i == 4 { "1" } else { "0" });
    }
}

#[test]
fn unsolvable_right_exits_two() {
    let out = gamma(&["solve", "right", "z^4 + z^5", "z^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["status"], "no");
}

#[test]
fn non_commuting_pair() {
    let out = gamma(&["commute", "2*z^2", "5*z^3"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["status"], "no");
    assert_eq!(v["commute"], false);
}

#[test]
fn commuting_pair() {
    let out = gamma(&["commute", "2*z^2", "4*z^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["commute"], true);
}

#[test]
fn malformed_json_reports_position() {
    let out = gamma(&["boettcher", "{\"field\": 3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1 column"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn order_below_two_is_an_error() {
    let out = gamma(&["boettcher", "z + z^2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_file_round_trip() {
    let first = gamma(&["--trunc", "10", "transition", "z^2 + z^3"]);
    assert_eq!(first.status.code(), Some(0));
    let series = json(&gamma(&["--trunc", "10", "boettcher", "z^2 + z^3"]))["beta"].clone();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{series}").unwrap();
    let arg = format!("@{}", file.path().display());
    let out = gamma(&["solve", "left", &arg, "z"]);
    // a unit is not a valid Γ argument, so this must fail cleanly
    assert_eq!(out.status.code(), Some(1));

    let a = r#"{"field":{"kind":"exact","conductor":24},"trunc":8,"coeffs":["0","0","1","1/2"]}"#;
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "{a}").unwrap();
    let arg = format!("@{}", file.path().display());
    let out = gamma(&["--trunc", "8", "boettcher", &arg]);
    assert_eq!(out.status.code(), Some(0));
    let beta = &json(&out)["beta"]["coeffs"];
    assert_eq!(beta[1], "1");
    assert_eq!(beta[2], "-1/4");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gamma"))
        .args(["decompose", "--count-only", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"z^6 - z^7").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
}

#[test]
fn approx_backend() {
    let out = gamma(&["--field", "approx", "--tol", "1e-10", "solve", "right", "z^8", "z^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "ok");
}

#[test]
fn selftest_is_deterministic() {
    let a = gamma(&["--seed", "7", "--trunc", "12", "selftest", "--cases", "2"]);
    let b = gamma(&["--seed", "7", "--trunc", "12", "selftest", "--cases", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_truncation_rejected() {
    let out = gamma(&["--trunc", "2", "boettcher", "z^2"]);
    assert_ne!(out.status.code(), Some(0));
}
