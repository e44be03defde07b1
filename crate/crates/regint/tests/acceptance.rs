//! End-to-end acceptance suite. Each test runs one criterion at its stated
//! bound, prints a single pass/fail line (visible under `--nocapture`), and
//! asserts both the outcome and, where stated, the time budget.

use regint::verify;
use std::time::{Duration, Instant};

fn run(name: &str, label: &str, budget: Option<Duration>, f: impl FnOnce() -> verify::SuiteResult) {
    let started = Instant::now();
    let result = f();
    let elapsed = started.elapsed();
    let (ok, total) = result.counts();
    let status = if result.passed() { "PASS" } else { "FAIL" };
    println!("{name} ({label}): {status} — {ok}/{total} checks in {elapsed:.2?}");
    if !result.passed() {
        for check in result.checks.iter().filter(|c| !c.passed) {
            println!("  failed: {} — {}", check.name, check.detail);
        }
    }
    assert!(result.passed(), "{name} failed");
    if let Some(budget) = budget {
        assert!(elapsed < budget, "{name} exceeded its {budget:?} budget: {elapsed:?}");
    }
}

#[test]
fn criterion_1_oracle_equivalence() {
    run(
        "criterion 1",
        "brute-force oracle agrees with the formula to 3000",
        Some(Duration::from_secs(60)),
        || verify::oracle_counts(3_000),
    );
}

#[test]
fn criterion_2_identity_suite() {
    run(
        "criterion 2",
        "identities over [2, 10^6] via the sieve",
        Some(Duration::from_secs(10)),
        || verify::identity_range(1_000_000).expect("sieve within cap"),
    );
}

#[test]
fn criterion_3_ratio_sets() {
    run(
        "criterion 3",
        "both ratio sets are populated over [1, 10^5]",
        None,
        || verify::ratio_sets_scan(100_000).expect("sieve within cap"),
    );
}

#[test]
fn criterion_4_multiplicativity() {
    run(
        "criterion 4",
        "submultiplicative bound and multiplicativity on the 200x200 grid",
        None,
        || verify::multiplicativity_grid(200).expect("sieve within cap"),
    );
}

#[test]
fn criterion_5_difference_extremes() {
    run(
        "criterion 5",
        "V(n+1)-V(n) swings past ±10^5 below 10^6",
        Some(Duration::from_secs(10)),
        || verify::difference_extremes(1_000_000).expect("sieve within cap"),
    );
}

#[test]
fn criterion_6_witness_searches() {
    // The 30-second budget is per search; bounding the whole suite by it is
    // stricter.
    run(
        "criterion 6",
        "all canonical witness searches verify",
        Some(Duration::from_secs(30)),
        || verify::witness_examples(1_000_000),
    );
}

#[test]
fn criterion_7_density_convergence() {
    run(
        "criterion 7",
        "greedy hits every target within 1e-4, exact hits at 0",
        Some(Duration::from_secs(30)),
        || verify::density_targets(1_000_000),
    );
}

#[test]
fn criterion_8_cross_module_consistency() {
    run(
        "criterion 8",
        "greedy, standalone, and function-value ratios coincide",
        None,
        || verify::cross_consistency(1_000_000),
    );
}
