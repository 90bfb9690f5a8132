use std::fs;
use std::process::{Command, Output};

use eqslice::corpus;
use eqslice::symdiag::parse_sym;

fn eqslice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqslice")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    eqslice(args).status.code().expect("exited")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(eqslice(args).stdout).unwrap()
}

fn stderr(args: &[&str]) -> String {
    String::from_utf8(eqslice(args).stderr).unwrap()
}

#[test]
fn invariants_of_files() {
    let dir = tempfile::tempdir().unwrap();
    let unknot = dir.path().join("unknot.pd");
    fs::write(&unknot, "PD[X(2,2,1,1)]\n").unwrap();
    let out = stdout(&["invariants", unknot.to_str().unwrap()]);
    assert!(out.contains("jones: 1\n") && out.contains("determinant: 1\n"));
    assert!(stdout(&["invariants", "t25"]).contains("determinant: 5\n"));

    let bad = dir.path().join("bad.pd");
    fs::write(&bad, "PD[X(1,2,3)]\n").unwrap();
    assert_eq!(code(&["invariants", bad.to_str().unwrap()]), 2);
    assert_eq!(code(&["invariants", "no_such_diagram"]), 2);
}

#[test]
fn state_sum_limit_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_eqslice"))
        .args(["invariants", "t25"])
        .env("EQSLICE_MAX_CROSSINGS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quotients() {
    let h1 = stdout(&["quotient", "fig8_tau", "h1"]);
    assert!(h1.contains("determinant: 5\n"));
    assert!(stdout(&["quotient", "fig8_tau", "h2"]).contains("unknot_status: ProvenUnknot"));
    assert!(stdout(&["quotient", "unknot_std", "h1"]).contains("unknot_status: ProvenUnknot"));
    assert_eq!(code(&["quotient", "clasp_c7", "h1"]), 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k1.pd");
    assert_eq!(code(&["quotient", "fig8_tau", "h1", "--out", path.to_str().unwrap()]), 0);
    assert!(stdout(&["invariants", path.to_str().unwrap()]).contains("determinant: 5\n"));
}

#[test]
fn certify_exit_codes() {
    assert_eq!(code(&["certify", "fig8_mirror_tau", "s2xs2_tau1"]), 0);
    assert_eq!(code(&["certify", "fig8_tau", "s2xs2_tau1"]), 10);
    assert_eq!(code(&["certify", "fig8_tau", "s4"]), 11);
    assert_eq!(code(&["certify", "fig8_tau", "k3"]), 2);
    assert_eq!(code(&["certify", "fig8_tau", "s2xs2_tau2", "--convention", "as-stated"]), 0);
}

#[test]
fn unknot_search_codes() {
    assert!(stdout(&["unknot-search", "fig8_tau", "--allow", "A,B-"]).starts_with("found: yes\nk: 1\n"));
    assert_eq!(code(&["unknot-search", "fig8_tau", "--allow", "C"]), 11);
}

#[test]
fn tree_commands() {
    let dot = stdout(&["tree", "derive", "three_s2xs2(1)", "--format", "dot"]);
    assert_eq!(dot.matches("[label=\"").count(), 3);
    assert!(dot.contains("\"1 C\""));

    let dir = tempfile::tempdir().unwrap();
    let no_fixed = dir.path().join("swap.tree");
    fs::write(&no_fixed, "vertex 1 A\nvertex 2 A\nedge 1 2 P P\nrho 1 2\n").unwrap();
    let path = no_fixed.to_str().unwrap();
    assert_eq!(code(&["tree", "validate", path]), 5);
    assert!(stderr(&["tree", "validate", path]).contains("condition 1"));

    let single = dir.path().join("single.tree");
    fs::write(&single, "vertex 1 B-\n").unwrap();
    let text = stdout(&["tree", "assoc", single.to_str().unwrap()]);
    let got = parse_sym(&text).unwrap();
    let want = corpus::sym("hopf_b_minus").unwrap();
    assert_eq!((got.base.crossings(), got.crossing_pairs(), &got.axis), (want.base.crossings(), want.crossing_pairs(), &want.axis));

    assert!(stdout(&["tree", "prune", "caterpillar_c5", "3"]).contains("vertex 3"));
    assert_eq!(code(&["tree", "prune", "caterpillar_c5", "2"]), 2);
}

#[test]
fn plumbing_command() {
    assert!(stdout(&["plumbing", "s2xs2_tau1"]).contains("# type B+"));
    assert_eq!(code(&["plumbing", "three_s2xs2(0)"]), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.plumb");
    fs::write(&bad, "ambient: s4\nsphere 1 0\nsphere 2 0\nsphere 3 0\npoint 1 2 C\npoint 2 3 A\n").unwrap();
    assert_eq!(code(&["plumbing", bad.to_str().unwrap()]), 5);
}
