//! Acceptance suite: one test per criterion, each printing a
//! single PASS/FAIL line (visible with `cargo test -- --nocapture`).
//! Everything is exact rational arithmetic; tolerance is equality.

use reynolds_core::suite::{self, CriterionReport};

fn assert_criterion(report: CriterionReport) {
    println!("{}", report.summary());
    if !report.passed() {
        for item in report.items.iter().filter(|i| !i.passed) {
            eprintln!("  failed: {}", item.label);
        }
        panic!("{} failed", report.name);
    }
}

#[test]
fn criterion_01_sl2_closed_forms() {
    assert_criterion(suite::criterion_sl2_closed_forms());
}

#[test]
fn criterion_02_sl2_kernel() {
    assert_criterion(suite::criterion_sl2_kernel());
}

#[test]
fn criterion_03_worked_examples() {
    assert_criterion(suite::criterion_worked_examples());
}

#[test]
fn criterion_04_conjecture_evidence() {
    assert_criterion(suite::criterion_conjectures(4));
}

#[test]
fn criterion_05_operator_laws() {
    assert_criterion(suite::criterion_operator_laws());
}

#[test]
fn criterion_06_haar_consistency() {
    assert_criterion(suite::criterion_haar_consistency());
}

#[test]
fn criterion_07_generator_membership() {
    assert_criterion(suite::criterion_generator_membership());
}

#[test]
fn criterion_08_identities() {
    assert_criterion(suite::criterion_identities(8));
}

#[test]
fn criterion_09_split_grid() {
    assert_criterion(suite::criterion_split_grid());
}

#[test]
fn criterion_10_denominator_primes() {
    assert_criterion(suite::criterion_denominator_primes());
}

/// Wider conjecture grid than the gate requires; run with
/// `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore]
fn extended_conjecture_sweep() {
    assert_criterion(suite::criterion_conjectures(6));
}
