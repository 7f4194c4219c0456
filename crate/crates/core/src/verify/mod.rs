//! Seeded property suites checking the structural results against
//! brute-force oracles.

pub mod families;
mod suites;

use crate::error::{Error, Result};
use serde::Serialize;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: usize,
    /// Descriptions of the first few failing cases.
    pub failed: Vec<String>,
}

const MAX_LISTED: usize = 10;

pub(crate) struct Tally {
    cases: usize,
    failed: Vec<String>,
    failures: usize,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally {
            cases: 0,
            failed: Vec::new(),
            failures: 0,
        }
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.failed.len() < MAX_LISTED {
                self.failed.push(what());
            }
        }
    }

    fn report(self, suite: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            cases: self.cases,
            failures: self.failures,
            failed: self.failed,
        }
    }
}

type SuiteFn = fn(u64, &mut Tally) -> Result<()>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("distributivity", suites::distributivity),
    ("product_components", suites::product_components),
    ("tree_identities", suites::tree_identities),
    ("cancellation", suites::cancellation),
    ("rooted_extraction", suites::rooted_extraction),
    ("rooted_cancellation", suites::rooted_cancellation),
    ("chain_factorization", suites::chain_factorization),
    ("ef", suites::ef),
    ("class_c", suites::class_c),
    ("fmd", suites::fmd),
    ("classifier_golden", suites::classifier_golden),
];

/// Names of all suites, in run order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let (_, f) = SUITES.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::input(format!(
            "unknown suite {name}; known: {}",
            suite_names().join(", ")
        ))
    })?;
    let mut tally = Tally::new();
    f(seed, &mut tally)?;
    Ok(tally.report(name, seed))
}

pub fn run_all(seed: u64) -> Result<Vec<SuiteReport>> {
    suite_names()
        .into_iter()
        .map(|n| run_suite(n, seed))
        .collect()
}
