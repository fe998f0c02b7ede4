//! Structured pass/fail records shared by the verification suites.
//!
//! Exact values are rendered as canonical `p/q` strings and numeric values
//! as decimal strings, so reports are reproducible byte for byte.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

/// Outcome of a single check. `Info` marks observations (trends toward
/// asymptotic statements) that are reported but can never fail a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One verification check, optionally tagged with the polynomial family
/// and index it refers to.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<String>,
}

impl Check {
    pub fn new(name: &str, status: Status) -> Self {
        Check {
            name: String::from(name),
            family: None,
            n: None,
            status,
            exact_value: None,
            numeric_value: None,
            error_estimate: None,
        }
    }

    /// Pass/fail from a boolean.
    pub fn verdict(name: &str, ok: bool) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn info(name: &str) -> Self {
        Check::new(name, Status::Info)
    }

    pub fn family(mut self, family: &str) -> Self {
        self.family = Some(String::from(family));
        self
    }

    pub fn n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn exact(mut self, value: String) -> Self {
        self.exact_value = Some(value);
        self
    }

    pub fn numeric(mut self, value: String) -> Self {
        self.numeric_value = Some(value);
        self
    }

    pub fn error_estimate(mut self, value: String) -> Self {
        self.error_estimate = Some(value);
        self
    }
}

/// A named group of checks.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport {
            name: String::from(name),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// True when no check failed (info does not count against).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

/// Full verification report: a list of named suites.
#[derive(Debug, Clone, Serialize, Default)]
pub struct VerificationReport {
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, suite: SuiteReport) {
        self.suites.push(suite);
    }

    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }
}
