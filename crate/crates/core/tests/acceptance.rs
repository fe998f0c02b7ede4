//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`). Every tolerance is pinned here:
//! exact (bit-identical rationals) for the algebraic suites, relative
//! 1e-10 for the quadrature suite run at 1e-12 working tolerance.

use std::time::Instant;

use xilambda_core::report::{Status, SuiteReport};
use xilambda_core::suites;

fn assess(name: &str, started: Instant, suites_run: &[&SuiteReport]) {
    let mut failures = Vec::new();
    let mut pass = 0usize;
    let mut info = 0usize;
    for suite in suites_run {
        for check in &suite.checks {
            match check.status {
                Status::Pass => pass += 1,
                Status::Info => info += 1,
                Status::Fail => failures.push(format!(
                    "{}/{} family={:?} n={:?} value={:?}",
                    suite.name, check.name, check.family, check.n, check.numeric_value
                )),
            }
        }
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {name}: {verdict} ({pass} pass, {info} info, {} fail, {:.2?})",
        failures.len(),
        started.elapsed()
    );
    assert!(failures.is_empty(), "{name} failures:\n{}", failures.join("\n"));
}

fn names_of(suite: &SuiteReport) -> Vec<&str> {
    suite.checks.iter().map(|c| c.name.as_str()).collect()
}

#[test]
fn criterion_1_structural_exact() {
    let started = Instant::now();
    let suite = suites::structural_suite(12);
    for required in [
        "cross-construction-equality",
        "leading-coefficient",
        "value-at-zero",
        "value-at-one",
        "coeff-sum",
        "coeff-top",
        "sign-alternation",
        "log-concavity",
    ] {
        assert!(
            names_of(&suite).contains(&required),
            "missing check {required}"
        );
    }
    // Both families at every n = 1..=12.
    assert_eq!(suite.checks.len(), 12 * 2 * 9);
    assess("criterion-1 (structural, n <= 12, exact)", started, &[&suite]);
}

#[test]
fn criterion_2_eulerian_identities() {
    let started = Instant::now();
    let suite = suites::eulerian_suite();
    for required in [
        "worpitzky-type-b",
        "eulerian-sum-type-b",
        "eulerian-sum-type-a",
        "descent-count-type-a",
        "descent-count-type-b",
        "symmetry-and-row-sums",
    ] {
        assert!(
            names_of(&suite).contains(&required),
            "missing check {required}"
        );
    }
    assess("criterion-2 (eulerian identities, exact)", started, &[&suite]);
}

#[test]
fn criterion_3_roots() {
    let started = Instant::now();
    let suite = suites::roots_suite(10);
    for required in [
        "adapted-root-count",
        "all-real",
        "squarefree",
        "all-in-unit",
        "endpoint-bound",
        "even-poly-root-pairs",
        "interlacing",
        "bound-sequence-decreasing",
    ] {
        assert!(
            names_of(&suite).contains(&required),
            "missing check {required}"
        );
    }
    // Interlacing pairs for n = 2..9 against n+1, both families.
    let interlacing = suite
        .checks
        .iter()
        .filter(|c| c.name == "interlacing")
        .count();
    assert_eq!(interlacing, 16);
    assess("criterion-3 (roots, n = 2..10, exact counts)", started, &[&suite]);
}

#[test]
fn criterion_4_integral_representations() {
    let started = Instant::now();
    // Working tolerance 1e-12, assertions at 1e-10.
    let suite = suites::integral_suite(6, 12);
    for required in [
        "integral-beta-vs-reference",
        "integral-zeta-vs-reference",
        "dual-route-agreement",
        "anchor-beta2-over-pi",
        "anchor-zeta3-over-pi2",
        "zeta-dual-algorithm",
        "beta-dual-algorithm",
    ] {
        assert!(
            names_of(&suite).contains(&required),
            "missing check {required}"
        );
    }
    let dual = suite
        .checks
        .iter()
        .filter(|c| c.name == "dual-route-agreement")
        .count();
    assert_eq!(dual, 10, "dual-route pairs for n <= 5, both kernels");
    assess(
        "criterion-4 (integrals, n <= 6, rel 1e-10)",
        started,
        &[&suite],
    );
}

#[test]
fn criterion_5_pi_multiples() {
    let started = Instant::now();
    let suite = suites::pi_multiple_suite(12);
    let positives = suite
        .checks
        .iter()
        .filter(|c| c.name == "pi-ratio-positive")
        .count();
    assert_eq!(positives, 24);
    assert!(names_of(&suite).contains(&"pi-ratio-decreasing"));
    assess("criterion-5 (pi multiples, n <= 12, exact)", started, &[&suite]);
}

#[test]
fn criterion_6_properties() {
    let started = Instant::now();
    let suite = suites::property_suite(12);
    for required in ["grid-sup-bound", "evenness", "polylog-closed-form-residual"] {
        assert!(
            names_of(&suite).contains(&required),
            "missing check {required}"
        );
    }
    // Polylog residuals for m = 0..=8 at z in {1/3, 1/2}.
    let polylog = suite
        .checks
        .iter()
        .filter(|c| c.name == "polylog-closed-form-residual")
        .count();
    assert_eq!(polylog, 18);
    assess("criterion-6 (grid bound, evenness, polylog)", started, &[&suite]);
}
