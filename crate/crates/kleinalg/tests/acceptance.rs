//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its runtime budget. Everything algebraic is exact; the
//! budgets hold in debug builds.

use std::process::Command;
use std::time::{Duration, Instant};

use kleinalg::algebra::Flavor;
use kleinalg::checks::{
    census_suite, cocycle_suite, coordinate_suite, localfield_suite, module_suite,
    presentation_suite, topology_suite, CheckResult, RunConfig,
};

fn report(criterion: &str, checks: &[CheckResult], elapsed: Duration, budget: Duration) {
    let failed: Vec<&CheckResult> = checks.iter().filter(|c| !c.passed()).collect();
    let verdict = if failed.is_empty() && elapsed <= budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "[{verdict}] criterion {criterion}: {} checks in {} ms (budget {} ms)",
        checks.len(),
        elapsed.as_millis(),
        budget.as_millis()
    );
    for check in &failed {
        println!("        failed: {} {:?}", check.id, check.witness);
    }
    assert!(failed.is_empty(), "criterion {criterion} has failing checks");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn run_suite(
    criterion: &str,
    budget_ms: u64,
    suite: impl FnOnce(&RunConfig) -> Vec<CheckResult>,
) {
    let cfg = RunConfig::default();
    let start = Instant::now();
    let checks = suite(&cfg);
    report(
        criterion,
        &checks,
        start.elapsed(),
        Duration::from_millis(budget_ms),
    );
}

#[test]
fn criterion_1_cocycle_suite() {
    // exhaustive window-3 identity, bicharacter -1, 20 coboundary twists
    run_suite("1 (cocycle suite)", 1000, |cfg| {
        let checks = cocycle_suite(cfg);
        // the window yields at least 14^3 triples over (eps, n) alone
        assert!(cfg.window >= 3);
        checks
    });
}

#[test]
fn criterion_2_presentation_suite() {
    run_suite("2 (presentation suite)", 1000, |_| presentation_suite());
}

#[test]
fn criterion_3_module_suite() {
    run_suite("3 (module suite)", 5000, |cfg| module_suite(cfg));
}

#[test]
fn criterion_4_census() {
    // N = 2 twisted: 2 simples of dim 2; N = 4 twisted: 8; N = 4 untwisted:
    // 16 + 4; N = 6 twisted: 18; all with sum of squares 2 N^2.
    let cfg = RunConfig::default();
    let start = Instant::now();
    let checks = census_suite(&cfg);
    let spot = |n: u32, flavor: Flavor, dim1: usize, dim2: usize| {
        let report = kleinalg::repr::finite_census(n, flavor).unwrap();
        assert_eq!(report.dim_counts.get(&1).copied().unwrap_or(0), dim1);
        assert_eq!(report.dim_counts.get(&2).copied().unwrap_or(0), dim2);
        assert_eq!(
            report.sum_of_squares,
            2 * u64::from(n) * u64::from(n),
            "sum of squares at N = {n}"
        );
        assert!(report.pass());
    };
    spot(2, Flavor::Twisted, 0, 2);
    spot(4, Flavor::Twisted, 0, 8);
    spot(4, Flavor::Untwisted, 16, 4);
    spot(6, Flavor::Twisted, 0, 18);
    report(
        "4 (census)",
        &checks,
        start.elapsed(),
        Duration::from_millis(10000),
    );
}

#[test]
fn criterion_5_localfield_suite() {
    run_suite("5 (local-field suite)", 5000, |cfg| {
        assert_eq!(cfg.q_list, vec![5, 13]);
        localfield_suite(cfg)
    });
}

#[test]
fn criterion_6_coordinate_suite() {
    run_suite("6 (coordinate suite)", 1000, |cfg| coordinate_suite(cfg));
}

#[test]
fn criterion_7_topology_suite() {
    run_suite("7 (topology suite)", 5000, |cfg| topology_suite(cfg));
}

#[test]
fn criterion_8_end_to_end() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_kleinalg");

    // defaults exit 0
    let ok = Command::new(bin).arg("verify").output().expect("run verify");
    assert!(ok.status.success(), "verify with defaults must exit 0");

    // q = 7 violates 4 | q - 1 and exits 2 with a message citing it
    let bad = Command::new(bin)
        .args(["verify", "--q", "7"])
        .output()
        .expect("run verify --q 7");
    assert_eq!(bad.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&bad.stderr);
    assert!(
        stderr.contains("4 | q - 1"),
        "q = 7 rejection must cite the 4 | q - 1 precondition, got: {stderr}"
    );

    // structured reports are byte-identical across runs at a fixed seed
    let run_structured = || {
        Command::new(bin)
            .args(["verify", "--seed", "42", "--format", "structured"])
            .output()
            .expect("run structured verify")
    };
    let first = run_structured();
    let second = run_structured();
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "structured reports must be byte-identical at a fixed seed"
    );

    let elapsed = start.elapsed();
    println!(
        "[PASS] criterion 8 (end-to-end): 4 binary invocations in {} ms",
        elapsed.as_millis()
    );
}
