//! Structured results for the law-checking suites.
//!
//! Suites account for every instance they test, bucketed by law, and keep
//! the tested operands and both sides of the comparison as display strings —
//! so a failure is a reproducible datum rather than a bare boolean. The
//! exhaustive suites run into the millions of instances, where keeping a
//! detail row per passing instance would dwarf the work itself; a report
//! therefore stores exact per-law tallies always, detail rows for everything
//! while small, and detail rows for failures always (up to a generous cap).

use serde::Serialize;
use std::fmt;

/// Detail rows kept per report before passing instances stop being stored.
const DETAIL_CAP: usize = 10_000;
/// Failing rows kept per report; failures beyond this are counted only.
const FAILURE_CAP: usize = 1_000;

/// One tested law instance, in display form.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Instance {
    /// Which law was checked, e.g. `associativity` or `right-unit`.
    pub law: String,
    /// The operands the law was instantiated at.
    pub operands: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// Exact accounting for one law within a suite.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LawStat {
    pub law: String,
    pub total: usize,
    pub failed: usize,
}

/// A suite run: parameters, per-law tallies, and detail rows.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    /// Bound settings and similar knobs, as ordered key/value pairs.
    pub params: Vec<(String, String)>,
    /// Per-law totals, in first-tested order. Always complete.
    pub stats: Vec<LawStat>,
    /// Detail rows actually kept; see `detail_complete`.
    pub instances: Vec<Instance>,
    /// True when `instances` holds every tested instance.
    pub detail_complete: bool,
    /// Failures counted in `stats` but not kept as rows (only under
    /// pathologically broken views).
    pub failures_dropped: usize,
    #[serde(skip)]
    kept_failures: usize,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            params: Vec::new(),
            stats: Vec::new(),
            instances: Vec::new(),
            detail_complete: true,
            failures_dropped: 0,
            kept_failures: 0,
        }
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    fn tally(&mut self, law: &str, pass: bool) {
        match self.stats.iter_mut().find(|s| s.law == law) {
            Some(stat) => {
                stat.total += 1;
                if !pass {
                    stat.failed += 1;
                }
            }
            None => self.stats.push(LawStat {
                law: law.to_string(),
                total: 1,
                failed: usize::from(!pass),
            }),
        }
    }

    fn store(&mut self, pass: bool, row: impl FnOnce() -> Instance) {
        if self.total() <= DETAIL_CAP {
            self.kept_failures += usize::from(!pass);
            self.instances.push(row());
            return;
        }
        self.detail_complete = false;
        if pass {
            return;
        }
        if self.kept_failures < FAILURE_CAP {
            self.kept_failures += 1;
            self.instances.push(row());
        } else {
            self.failures_dropped += 1;
        }
    }

    /// Records a comparison instance; equality decides pass/fail. Operand
    /// text is built lazily, only if the row is kept.
    pub fn check<T: Eq + fmt::Display>(
        &mut self,
        law: &str,
        operands: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        let pass = expected == actual;
        self.tally(law, pass);
        self.store(pass, || Instance {
            law: law.to_string(),
            operands: operands(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
    }

    /// Records an instance judged by a predicate rather than an equality of
    /// element values; `detail` explains a failure.
    pub fn check_bool(
        &mut self,
        law: &str,
        operands: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
        pass: bool,
    ) {
        self.tally(law, pass);
        self.store(pass, || Instance {
            law: law.to_string(),
            operands: operands(),
            expected: "ok".to_string(),
            actual: if pass { "ok".to_string() } else { detail() },
            pass,
        });
    }

    pub fn total(&self) -> usize {
        self.stats.iter().map(|s| s.total).sum()
    }

    pub fn failed(&self) -> usize {
        self.stats.iter().map(|s| s.failed).sum()
    }

    pub fn passed(&self) -> usize {
        self.total() - self.failed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// Kept failing rows (all failures, unless a broken view produced more
    /// than the cap).
    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.pass)
    }

    /// One-line human summary, e.g. `nonsym[V]: 812 checked, all pass`.
    pub fn summary(&self) -> String {
        if self.all_pass() {
            format!("{}: {} checked, all pass", self.suite, self.total())
        } else {
            format!("{}: {} checked, {} FAILED", self.suite, self.total(), self.failed())
        }
    }
}
