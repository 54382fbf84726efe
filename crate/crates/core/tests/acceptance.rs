//! Acceptance suite: runs the full verification grid once and asserts each
//! criterion separately, printing one pass/fail line per criterion
//! (visible with `cargo test --test acceptance -- --nocapture`).

use casimir_core::verify::{run_all, CriterionOutcome, VerifyConfig};
use std::sync::OnceLock;

fn outcomes() -> &'static [CriterionOutcome] {
    static OUTCOMES: OnceLock<Vec<CriterionOutcome>> = OnceLock::new();
    OUTCOMES.get_or_init(|| run_all(&VerifyConfig::default()))
}

fn assert_criterion(id: usize) {
    let o = outcomes()
        .iter()
        .find(|o| o.id == id)
        .unwrap_or_else(|| panic!("criterion {id} missing"));
    println!(
        "criterion {:2} [{}] {}",
        o.id,
        if o.passed { "PASS" } else { "FAIL" },
        o.name
    );
    for l in &o.lines {
        println!(
            "    {}  measured {:.3e} vs threshold {:.1e}  {}",
            if l.passed { "ok  " } else { "FAIL" },
            l.measured,
            l.threshold,
            l.label
        );
    }
    assert!(o.passed, "criterion {} ({}) failed", o.id, o.name);
}

#[test]
fn criterion_01_massless_closed_forms() {
    assert_criterion(1);
}

#[test]
fn criterion_02_massless_limit_convergence() {
    assert_criterion(2);
}

#[test]
fn criterion_03_cross_formula_identity() {
    assert_criterion(3);
}

#[test]
fn criterion_04_series_vs_quadrature() {
    assert_criterion(4);
}

#[test]
fn criterion_05_fluctuation_route() {
    assert_criterion(5);
}

#[test]
fn criterion_06_mode_sum_route() {
    assert_criterion(6);
}

#[test]
fn criterion_07_green_function_structure() {
    assert_criterion(7);
}

#[test]
fn criterion_08_special_functions() {
    assert_criterion(8);
}

#[test]
fn criterion_09_physical_units_spot_check() {
    assert_criterion(9);
}

#[test]
fn criterion_10_mass_screening() {
    assert_criterion(10);
}
