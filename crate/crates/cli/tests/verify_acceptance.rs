//! One test per acceptance criterion against the checked-in golden file.
//! Each prints its report line whatever the verdict.

use std::io::Write;

use moduli_lab_cli::golden::{self, GoldenFile};
use moduli_lab_cli::verify::{run_criterion, VerifyContext};

const SEED: u64 = 42;

fn check(id: u8) {
    let golden = GoldenFile::load(&golden::default_path()).expect("golden file loads");
    let ctx = VerifyContext::new(golden, SEED);
    let line = run_criterion(id, &ctx).expect("criterion runs without internal inconsistency");
    let _ = writeln!(std::io::stderr(), "\n{line}");
    assert!(line.passed(), "{line}");
}

#[test]
fn criterion_01_lambda_table() {
    check(1);
}

#[test]
fn criterion_02_closed_form_links() {
    check(2);
}

#[test]
fn criterion_03_lambda_monotone() {
    check(3);
}

#[test]
fn criterion_04_conjecture_threshold() {
    check(4);
}

#[test]
fn criterion_05_homology_anchors() {
    check(5);
}

#[test]
fn criterion_06_theorem1() {
    check(6);
}

#[test]
fn criterion_07_theorem2_injectivity() {
    check(7);
}

#[test]
fn criterion_08_theorem3_audit() {
    check(8);
}

#[test]
fn criterion_09_counting_identities() {
    check(9);
}

#[test]
fn criterion_10_flux_dimension() {
    check(10);
}

#[test]
fn criterion_11_cube_cycles() {
    check(11);
}

#[test]
fn criterion_12_structure() {
    check(12);
}

#[test]
fn criterion_13_packing() {
    check(13);
}
