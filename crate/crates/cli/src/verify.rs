//! The `verify-paper` command: reruns the reference checks.

use std::fmt::Write as _;

use dynspan::checks::{run_all, run_check, CheckOptions, CheckResult, CHECK_IDS};
use serde::Serialize;

#[derive(Serialize)]
struct Row<'a> {
    id: &'a str,
    title: &'a str,
    passed: bool,
    expected: &'a str,
    got: &'a str,
    elapsed_ms: u128,
}

/// Runs the selected checks. `perturb_lyness` adds one to a single entry of
/// the Lyness exponent matrix, which the suite must catch.
pub fn run(only: Option<&str>, perturb_lyness: bool) -> Result<Vec<CheckResult>, String> {
    let mut opts = CheckOptions::default();
    if perturb_lyness {
        opts.lyness_matrix[0][0] += 1;
    }
    match only {
        None => Ok(run_all(&opts)),
        Some(id) => run_check(id, &opts)
            .map(|r| vec![r])
            .ok_or_else(|| format!("unknown check {id:?}; known checks: {}", CHECK_IDS.join(", "))),
    }
}

pub fn to_json(results: &[CheckResult]) -> String {
    let rows: Vec<Row> = results
        .iter()
        .map(|r| Row {
            id: r.id,
            title: r.title,
            passed: r.passed,
            expected: &r.expected,
            got: &r.got,
            elapsed_ms: r.elapsed.as_millis(),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("rows serialize")
}

pub fn to_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.id.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  result  expected / got\n", "check");
    for r in results {
        let _ = writeln!(
            out,
            "{:<width$}  {:<6}  expected: {}\n{:<width$}          got:      {} ({:.2?})",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.expected,
            "",
            r.got,
            r.elapsed
        );
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} passed, {failed} failed", results.len() - failed);
    out
}
