//! End-to-end checks of the command line front end.

use std::process::Command;

fn nilc(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_nilc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn compare_worked_example() {
    let (stdout, _, code) = nilc(&[
        "compare", "--type", "A", "--rank", "1", "--r", "1", "--s", "-1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        "LEQ: true (σ_R = s0, ℓ=1, dim=1; σ_S = s1 s0 s1, ℓ=3, dim=2)"
    );
}

#[test]
fn catalogue_g2() {
    let (stdout, _, code) = nilc(&["catalogue", "--type", "G", "--rank", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1 height-2 nilpotent orbit(s)"));
    assert!(stdout.contains("(0,1)"));
    assert!(stdout.contains("9.1 A1"));
}

#[test]
fn enumerate_a2_counts() {
    let (stdout, _, code) = nilc(&["enumerate", "--type", "A", "--rank", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("7 B-orbits in N2"));
}

#[test]
fn exit_codes() {
    // parse error: 2
    let (_, stderr, code) = nilc(&["compare", "--type", "A", "--rank", "2", "--r", "x", "--s", "1,0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("ParseError"));

    // domain error: 3, error name echoed
    let (_, stderr, code) = nilc(&[
        "compare", "--type", "B", "--rank", "3", "--r", "1,1,1;0,1,0", "--s", "1,0,0",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("HeightOutOfRange"));

    let (_, stderr, code) = nilc(&["enumerate", "--type", "A", "--rank", "0"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("InvalidRank"));

    // NotARoot is echoed
    let (_, stderr, code) = nilc(&[
        "compare", "--type", "A", "--rank", "2", "--r", "5,5", "--s", "1,0",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("NotARoot"));
}

#[test]
fn rank_cap_applies_to_classical_types() {
    let (_, stderr, code) = nilc(&["catalogue", "--type", "B", "--rank", "9"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("InvalidRank"));

    let out = Command::new(env!("CARGO_BIN_EXE_nilc"))
        .args(["catalogue", "--type", "B", "--rank", "9"])
        .env("NILC_RANK_CAP", "9")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn deterministic_output() {
    let first = nilc(&["enumerate", "--type", "C", "--rank", "2"]);
    let second = nilc(&["enumerate", "--type", "C", "--rank", "2"]);
    assert_eq!(first, second);
    let first = nilc(&["hasse", "--type", "B", "--rank", "2", "--format", "json"]);
    let second = nilc(&["hasse", "--type", "B", "--rank", "2", "--format", "json"]);
    assert_eq!(first, second);
}

#[test]
fn hasse_json_roundtrip() {
    let (stdout, _, code) = nilc(&["hasse", "--type", "A", "--rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let parsed = nilc::export::from_json_string(&stdout).unwrap();
    assert_eq!(parsed.nodes.len(), 7);
    assert_eq!(parsed.system.type_letter, "A");
    assert_eq!(nilc::export::to_json_string(&parsed), stdout.trim_end());
}

#[test]
fn hasse_tilde_dot() {
    let (stdout, _, code) = nilc(&[
        "hasse", "--type", "C", "--rank", "2", "--format", "dot", "--orbit", "h2-02", "--tilde",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("digraph poset {"));
    assert!(stdout.contains("rank=same"));
}

#[test]
fn verify_catalogue_suite_passes() {
    let (stdout, _, code) = nilc(&["verify", "--suite", "catalogue"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[PASS] C1"));

    let (_, stderr, code) = nilc(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("ParseError"));
}
