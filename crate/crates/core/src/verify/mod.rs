//! Regression suites over the classification evidence, plus the on-disk cache.
//!
//! A suite is an ordered list of cases. Each case computes something, compares it
//! with an expectation derived independently, and records both sides as text.
//! Cases run in parallel on the current rayon pool; the report keeps declaration
//! order, so its JSON form (without timings) is byte-identical between runs.

pub mod cache;
pub mod corpus;
mod suites;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charengine::{Engine, FormalChar, PowerKind, RestrictTarget};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The independent character computations the suites compare against.
pub trait CharacterOracle: Sync {
    fn power(&self, rep: &FormalChar, n: u32, kind: PowerKind) -> Result<FormalChar>;

    fn tensor(&self, a: &FormalChar, b: &FormalChar) -> Result<FormalChar>;

    fn restrict_classical(&self, m: usize, target: RestrictTarget, lambda: &Partition) -> Result<FormalChar>;

    fn sym_power(&self, rep: &FormalChar, n: u32) -> Result<FormalChar> {
        self.power(rep, n, PowerKind::Sym)
    }

    fn ext_power(&self, rep: &FormalChar, n: u32) -> Result<FormalChar> {
        self.power(rep, n, PowerKind::Ext)
    }
}

impl CharacterOracle for Engine {
    fn power(&self, rep: &FormalChar, n: u32, kind: PowerKind) -> Result<FormalChar> {
        Engine::power(self, rep, n, kind)
    }

    fn tensor(&self, a: &FormalChar, b: &FormalChar) -> Result<FormalChar> {
        self.tensor_chars(a, b)
    }

    fn restrict_classical(&self, m: usize, target: RestrictTarget, lambda: &Partition) -> Result<FormalChar> {
        Engine::restrict_classical(self, m, target, lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: CaseStatus,
    /// Label-by-label differences when a comparison fails.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diff: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().all(|c| c.status != CaseStatus::Fail);
        SuiteReport { suite: suite.to_string(), cases, passed }
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn count(&self, status: CaseStatus) -> usize {
        self.cases.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }

    /// Cases whose computation tripped a dimension check.
    pub fn bookkeeping_violations(&self) -> Vec<&CaseRecord> {
        self.cases.iter().filter(|c| c.computed.starts_with(BOOKKEEPING_PREFIX)).collect()
    }

    /// The same report with timings removed; this is the deterministic part.
    pub fn without_timings(&self) -> SuiteReport {
        let mut out = self.clone();
        for c in &mut out.cases {
            c.wall_ms = None;
        }
        out
    }

    pub fn to_json(&self, timings: bool) -> String {
        let r = if timings { self.clone() } else { self.without_timings() };
        serde_json::to_string_pretty(&r).expect("reports always serialize")
    }

    /// One line per case and a closing tally.
    pub fn summary(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for c in &self.cases {
            out.push_str(&format!("  {:<4} {}  [{}]\n", c.status, c.id, c.anchor));
            out.push_str(&format!("       expected: {}\n", c.expected));
            out.push_str(&format!("       computed: {}\n", c.computed));
            if let Some(d) = &c.diff {
                out.push_str(&format!("       diff: {d}\n"));
            }
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} skipped\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.count(CaseStatus::Pass),
            self.count(CaseStatus::Fail),
            self.count(CaseStatus::Skip)
        ));
        out
    }
}

const BOOKKEEPING_PREFIX: &str = "error: dimension bookkeeping violated";

/// Names of the built-in suites, in run order.
pub const SUITES: [&str; 10] = [
    "dualities-vs-oracle",
    "plethysm-closed-forms",
    "branching",
    "theorem-positives",
    "section5-negatives",
    "section6-negatives",
    "lemma-big-mama",
    "lemma-proof1-distinctness",
    "three-factor",
    "closure-properties",
];

/// What one case produced.
pub(crate) struct Outcome {
    pub expected: String,
    pub computed: String,
    pub status: CaseStatus,
    pub diff: Option<String>,
}

impl Outcome {
    pub fn check(ok: bool, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        Outcome {
            expected: expected.into(),
            computed: computed.into(),
            status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
            diff: None,
        }
    }

    pub fn skip(expected: impl Into<String>, reason: impl Into<String>) -> Self {
        Outcome { expected: expected.into(), computed: reason.into(), status: CaseStatus::Skip, diff: None }
    }

    /// Exact comparison of two characters.
    pub fn chars(expected: &FormalChar, computed: &FormalChar) -> Self {
        let diff = char_diff(expected, computed);
        Outcome {
            expected: expected.to_text(),
            computed: computed.to_text(),
            status: if diff.is_none() { CaseStatus::Pass } else { CaseStatus::Fail },
            diff,
        }
    }
}

/// `label: expected a, got b` for every label where the two disagree.
pub fn char_diff(expected: &FormalChar, computed: &FormalChar) -> Option<String> {
    if expected.group() != computed.group() {
        return Some(format!("groups differ: {} vs {}", expected.group(), computed.group()));
    }
    let mut labels: Vec<_> = expected.terms().keys().chain(computed.terms().keys()).collect();
    labels.sort();
    labels.dedup();
    let parts: Vec<String> = labels
        .into_iter()
        .filter(|w| expected.get(w) != computed.get(w))
        .map(|w| format!("{w}: expected {}, got {}", expected.get(w), computed.get(w)))
        .collect();
    (!parts.is_empty()).then(|| parts.join("; "))
}

pub(crate) type CaseFn = Box<dyn Fn(&Ctx) -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    pub id: String,
    pub anchor: String,
    pub run: CaseFn,
}

impl Case {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        run: impl Fn(&Ctx) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Case { id: id.into(), anchor: anchor.into(), run: Box::new(run) }
    }
}

/// What a case may use: the engine for super-algebra work and an oracle for comparisons.
pub struct Ctx<'a> {
    pub engine: &'a Engine,
    pub oracle: &'a dyn CharacterOracle,
}

fn execute(ctx: &Ctx, case: &Case) -> CaseRecord {
    let start = Instant::now();
    let outcome = (case.run)(ctx).unwrap_or_else(|e| Outcome {
        expected: "no error".into(),
        computed: format!("error: {e}"),
        status: CaseStatus::Fail,
        diff: None,
    });
    CaseRecord {
        id: case.id.clone(),
        anchor: case.anchor.clone(),
        expected: outcome.expected,
        computed: outcome.computed,
        status: outcome.status,
        diff: outcome.diff,
        wall_ms: Some(start.elapsed().as_millis() as u64),
    }
}

/// Runs a built-in suite, comparing against the engine itself as oracle.
pub fn run_suite(name: &str, engine: &Engine) -> Result<SuiteReport> {
    run_suite_with(name, engine, engine)
}

/// Runs a built-in suite against a caller-supplied oracle.
pub fn run_suite_with(name: &str, engine: &Engine, oracle: &dyn CharacterOracle) -> Result<SuiteReport> {
    let cases = suites::cases(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let ctx = Ctx { engine, oracle };
    let records: Vec<CaseRecord> = cases.par_iter().map(|c| execute(&ctx, c)).collect();
    log::info!("suite {name}: {} cases", records.len());
    Ok(SuiteReport::new(name, records))
}

/// Every built-in suite in order.
pub fn run_all(engine: &Engine) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, engine)).collect()
}
