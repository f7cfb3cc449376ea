//! End-to-end tests of the binary: golden output strings and exit codes.

use std::process::{Command, Output};

fn reynolds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reynolds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

#[test]
fn apply_sl2_power() {
    let out = reynolds(&[
        "apply",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "2",
        "a1^3*b2^3",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_line(&out),
        "1/4*a1^3*b2^3 - 3/4*a1^2*a2*b1*b2^2 + 3/4*a1*a2^2*b1^2*b2 - 1/4*a2^3*b1^3"
    );
}

#[test]
fn apply_kills_unbalanced_monomials() {
    let out = reynolds(&["apply", "--group", "sl", "--t", "2", "--n", "1", "a1"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "0");

    // a1*b2^3 has multidegree (1,3), so its image is zero as well.
    let out = reynolds(&["apply", "--group", "sl", "--t", "2", "--n", "2", "a1*b2^3"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "0");
}

#[test]
fn apply_gl_first_moment() {
    let out = reynolds(&[
        "apply",
        "--group",
        "gl",
        "--t",
        "2",
        "--m",
        "1",
        "--n",
        "1",
        "x[1][1]*y[1][1]",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_line(&out),
        "1/2*x[1][1]*y[1][1] + 1/2*x[1][2]*y[2][1]"
    );
}

#[test]
fn apply_strategies_agree() {
    for strategy in ["general", "closed", "auto"] {
        let out = reynolds(&[
            "apply",
            "--group",
            "sl",
            "--t",
            "2",
            "--n",
            "2",
            "--strategy",
            strategy,
            "a1^2*b2^2*a2*b1",
        ]);
        assert!(out.status.success(), "{strategy}");
        assert_eq!(
            stdout_line(&out),
            "-1/12*a1^3*b2^3 + 1/4*a1^2*a2*b1*b2^2 - 1/4*a1*a2^2*b1^2*b2 + 1/12*a2^3*b1^3",
            "{strategy}"
        );
    }
}

#[test]
fn apply_json_terms() {
    let out = reynolds(&[
        "apply", "--group", "sl", "--t", "2", "--n", "2", "--json", "a1*b2",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(
        value,
        serde_json::json!({ "terms": [["a1*b2", "1/2"], ["a2*b1", "-1/2"]] })
    );
}

#[test]
fn apply_exit_codes() {
    // parse error
    let out = reynolds(&["apply", "--group", "sl", "--t", "2", "--n", "2", "a1 +"]);
    assert_eq!(out.status.code(), Some(2));
    // unsupported action
    let out = reynolds(&["apply", "--group", "o", "--t", "2", "--n", "2", "a1*b2"]);
    assert_eq!(out.status.code(), Some(3));
    // balanced u-degree above the Weingarten regime
    let out = reynolds(&[
        "apply",
        "--group",
        "gl",
        "--t",
        "2",
        "--m",
        "1",
        "--n",
        "1",
        "x[1][1]^3*y[1][1]^3",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn integrate_values() {
    let out = reynolds(&["integrate", "--group", "su2", "u[1][1]*u[2][2]"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "1/2");

    let out = reynolds(&[
        "integrate",
        "--group",
        "unitary",
        "--t",
        "3",
        "u[1][1]*ubar[1][1]",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "1/3");

    let out = reynolds(&["integrate", "--group", "su2", "u[1][1]"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "0");

    let out = reynolds(&[
        "integrate",
        "--group",
        "unitary",
        "--t",
        "2",
        "u[1][1]^3*ubar[1][1]^3",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn generators_listing() {
    let out = reynolds(&["generators", "--group", "sl", "--t", "2", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("Delta(1,2) = a1*b2 - a2*b1"));
    assert!(text.contains("Delta(2,3) = a2*b3 - a3*b2"));
}

#[test]
fn check_invariance() {
    let out = reynolds(&[
        "check",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "2",
        "a1*b2 - a2*b1",
    ]);
    assert!(out.status.success());
    assert!(stdout_line(&out).starts_with("INVARIANT_LIKELY"));

    let out = reynolds(&["check", "--group", "sl", "--t", "2", "--n", "2", "a1"]);
    assert!(out.status.success());
    assert!(stdout_line(&out).starts_with("NOT_INVARIANT"));
}

#[test]
fn check_specific_element() {
    // diag(2, 1/2) moves a1 but fixes the minor.
    let out = reynolds(&[
        "check",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "2",
        "--element",
        "2,0,0,1/2",
        "a1",
    ]);
    assert!(out.status.success());
    assert!(stdout_line(&out).starts_with("MOVED"));

    let out = reynolds(&[
        "check",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "2",
        "--element",
        "2,0,0,1/2",
        "a1*b2 - a2*b1",
    ]);
    assert!(out.status.success());
    assert!(stdout_line(&out).starts_with("FIXED"));
}

#[test]
fn express_outputs() {
    let out = reynolds(&[
        "express",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "2",
        "a1^2*b2^2 - 2*a1*a2*b1*b2 + a2^2*b1^2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "Delta(1,2)^2");

    let out = reynolds(&["express", "--group", "sl", "--t", "2", "--n", "2", "a1*b1"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "NOT_IN_SPAN");
}

#[test]
fn split_check_clauses() {
    let out = reynolds(&[
        "split-check",
        "--case",
        "sl-minors",
        "--p",
        "5",
        "--t",
        "2",
        "--n",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "DOES_NOT_SPLIT (1 < t < n)");

    let out = reynolds(&[
        "split-check",
        "--case",
        "gl-xy",
        "--p",
        "7",
        "--t",
        "1",
        "--m",
        "4",
        "--n",
        "9",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "SPLITS (t = 1)");

    let out = reynolds(&[
        "split-check",
        "--case",
        "o-gram",
        "--p",
        "3",
        "--t",
        "2",
        "--n",
        "10",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "SPLITS (t = 2 and p odd)");

    let out = reynolds(&[
        "split-check",
        "--case",
        "gl-xy",
        "--p",
        "6",
        "--t",
        "1",
        "--m",
        "1",
        "--n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn identity_suite_passes() {
    let out = reynolds(&["identity-suite", "--bound", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 5);
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL")).count(), 0);
}

#[test]
fn reproduce_worked_examples() {
    let out = reynolds(&["reproduce", "worked-examples"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("PASS worked-examples"));
}

#[test]
fn reproduce_conjectures_budget() {
    let out = reynolds(&["reproduce", "conjectures", "--budget", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("MATCH"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "apply",
        "--group",
        "sl",
        "--t",
        "2",
        "--n",
        "3",
        "a1*b2*a2*b3",
    ];
    let first = reynolds(&args);
    let second = reynolds(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.status.success());
}
