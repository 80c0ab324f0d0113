//! End-to-end runs of the binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetatree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_thetatree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compare_terms() {
    let o = run(&["ord", "cmp", "v(0)", "v(v(0))"]);
    assert_eq!(stdout(&o), "LT\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_with_two_and_a_position() {
    let o = run(&["ord", "cmp", "v(0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
}

#[test]
fn invalid_terms_are_rejected() {
    let o = run(&["ord", "k", "w^0 + w^1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["ord", "validate", "w^0 + w^1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("false"));
}

#[test]
fn figure_tree_as_dot() {
    let o = run(&["gap", "iso-to", "o[(o, o[(o, o)])]", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=\"1\"]").count(), 2);
    assert_eq!(dot.matches("[label=\"0\"]").count(), 5);
}

#[test]
fn decisions_set_the_exit_status() {
    assert_eq!(
        run(&["gap", "check-t2bar", "(0 (1 (0) (0)))"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(run(&["gap", "check-t2bar", "(1)"]).status.code(), Some(1));
    assert_eq!(
        run(&["higman", "P{3;0<1}", "[0,2]", "[1,2,2]"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["higman", "P{3;0<1}", "[1]", "[0]"]).status.code(),
        Some(1)
    );
}

#[test]
fn batch_pairs_from_stdin() {
    let o = run_with_input(&["tree", "leq", "B(_)", "--json"], "o\to[o]\no[o]\to\n");
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"result\":true"));
    assert!(lines[1].contains("\"result\":false"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn collapse_of_omega_plus_one() {
    let o = run(&["ord", "g", "w^1 + w^0"]);
    assert_eq!(stdout(&o), "o[(o[o], (o, o))]\n");
}

#[test]
fn verify_reports_are_reproducible_json() {
    let args = ["verify", "iso", "--size", "6", "--json"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert!(
        text.starts_with("{\"suite\":\"iso\",\"params\":{\"size\":6"),
        "{text}"
    );
    assert!(text.contains("\"failures\":[]"));
    let args = [
        "verify",
        "coeff-lemmas",
        "--size",
        "3",
        "--samples",
        "200",
        "--seed",
        "7",
        "--json",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn unknown_suite() {
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
}
