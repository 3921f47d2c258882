//! End-to-end acceptance gate: one test per contract criterion, each
//! printing a single pass line with its case count.

use braidband::spaces::{lens_canonical, lens_equiv};
use braidband::verify::{self, VerifyReport, DEFAULT_SEED};

fn gate(n: usize, name: &str, report: &VerifyReport) {
    for f in &report.failures {
        eprintln!(
            "criterion {n} FAIL: input {} expected {} got {}",
            f.input, f.expected, f.actual
        );
    }
    assert!(report.passed(), "criterion {n} ({name}) failed");
    println!(
        "criterion {n} ({name}): PASS — {} cases",
        report.cases
    );
}

#[test]
fn criterion_01_formula_vs_oracle() {
    let report = verify::thm11_oracle(DEFAULT_SEED, 12, 500, 20);
    gate(1, "closed form vs conjugation oracle", &report);
}

#[test]
fn criterion_02_bezout_invariance() {
    let report = verify::bezout_invariance(DEFAULT_SEED, 12, 500, 20);
    gate(2, "Bezout representative invariance", &report);
}

#[test]
fn criterion_03_matrix_quotient_relations() {
    let report = verify::km_lemma(DEFAULT_SEED, 2000, 10, 9);
    gate(3, "matrix entry-quotient relations", &report);
}

#[test]
fn criterion_04_closed_form_anchors() {
    let report = verify::thm14_anchors(100);
    gate(4, "closed-form expansion anchors", &report);
}

#[test]
fn criterion_05_concat_identity() {
    let report = verify::concat_identity(DEFAULT_SEED, 1000);
    gate(5, "continued-fraction concat identity", &report);
}

#[test]
fn criterion_06_expansion_roundtrip() {
    let report = verify::cf_roundtrip(50);
    gate(6, "expansion round trip with parity", &report);
}

#[test]
fn criterion_07_degenerate_family() {
    let report = verify::degenerate_family(20);
    gate(7, "degenerate family all-infinite", &report);
}

#[test]
fn criterion_08_berge_order_cross_check() {
    let report = verify::berge_cross_check(12);
    gate(8, "Berge-family order cross check", &report);
}

#[test]
fn criterion_09_word_problem() {
    let report = verify::word_problem(DEFAULT_SEED, 10_000, 500);
    gate(9, "word problem and conjugator decomposition", &report);
}

#[test]
fn criterion_10_catalog_determinism() {
    let report = verify::catalog_determinism();
    gate(10, "catalog determinism and anchor row", &report);
    // independent anchor: the (5,7) slope-(2,3) surgery target
    let anchor = braidband::family::KnotSpec::new(
        5,
        7,
        braidband::exactmath::Slope::new(2, 3).unwrap(),
    )
    .target_lens()
    .unwrap();
    assert!(lens_equiv(&anchor, &lens_canonical(283, 183).unwrap()));
}
