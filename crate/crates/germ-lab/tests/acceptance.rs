//! Acceptance gate: one test per criterion, each running the
//! corresponding verification suite at its pinned bound and budget.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion pass/fail lines.

use std::time::Duration;

use germ_lab::verify::{run_suite, VerifyReport};

fn criterion(number: u32, title: &str, suite: &str, bound: i64, budget: Duration) -> VerifyReport {
    let report = run_suite(suite, Some(bound)).expect("suite runs");
    let elapsed = Duration::from_millis(report.wall_ms);
    let status = if report.passed() && elapsed <= budget { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {number} [{status}] {title}: suite={suite} bound={bound} cases={} failures={} elapsed={}ms (budget {}ms)",
        report.cases,
        report.failure_count,
        report.wall_ms,
        budget.as_millis(),
    );
    for f in &report.failures {
        println!("    {}: {}", f.case, f.detail);
    }
    assert!(report.passed(), "criterion {number} failed: {:?}", report.failures);
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its budget: {elapsed:?} > {budget:?}"
    );
    report
}

#[test]
fn acceptance_1_orbit_tree_bijectivity() {
    // replay round-trips and levels for all coprime pairs k1 <= 300
    criterion(
        1,
        "orbit-tree bijectivity",
        "orbit-tree",
        300,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_2_projection_bijections() {
    // decoration bijections to level 20 plus the modular lift, k1 <= 300
    criterion(
        2,
        "decoration and left-column bijections",
        "projections",
        300,
        Duration::from_secs(10),
    );
}

#[test]
fn acceptance_3_center_identity_and_determinants() {
    // center identity = 1 on the orbit sweep, row expansion agreement,
    // dense determinants on chains of length <= 12, k <= 500
    criterion(
        3,
        "chain identities and determinant cross-checks",
        "chain-identities",
        500,
        Duration::from_secs(10),
    );
}

#[test]
fn acceptance_4_resolution_engine() {
    // engine vs continued-fraction prediction, counts, trace labels,
    // boundary membership, Mumford checks, chart oracle to k1 <= 12
    criterion(
        4,
        "blowup engine against prediction and chart oracle",
        "resolution",
        100,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_5_extension_uniqueness() {
    // unique auxiliary pair and unique bounded eight-component
    // extension, closed forms vs brute force, k1, k2 <= 100
    criterion(
        5,
        "extension system uniqueness and closed forms",
        "dio-extension",
        100,
        Duration::from_secs(30),
    );
}

#[test]
fn acceptance_6_quotient_deltas() {
    // blowup-count invariants: value, complement sum (k <= 200), and
    // the relative ledger (k <= 120)
    criterion(
        6,
        "quotient blowup-count invariants",
        "quotient-delta",
        200,
        Duration::from_secs(5),
    );
}

#[test]
fn acceptance_7_classification_desk_scale() {
    // exhaustive monodromy enumeration + smoothness vs the family
    // table for every pair with k1+k2 <= 12 and every degree <= 8,
    // including the three named examples
    criterion(
        7,
        "germ classification at desk scale",
        "classification",
        12,
        Duration::from_secs(300),
    );
}

#[test]
fn acceptance_8_generation_criterion() {
    // two-generator criterion exhaustively in degrees <= 7, subcase
    // exclusions and forced shapes over the full sweep
    criterion(
        8,
        "transposition generation and subcase exclusions",
        "transposition-generation",
        7,
        Duration::from_secs(120),
    );
}
