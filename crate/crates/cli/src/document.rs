//! Serializable output documents. Field order is fixed by the struct
//! definitions, so identical inputs produce byte-identical JSON (with
//! `--no-timestamp`).

use serde::Serialize;

use xilambda_core::report::SuiteReport;
use xilambda_core::roots::RootReport;

#[derive(Serialize)]
pub struct Meta {
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl Meta {
    pub fn new(with_timestamp: bool) -> Self {
        Meta {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: with_timestamp.then(|| {
                chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
            }),
        }
    }
}

/// Verification report: named suites of pass/fail/info checks.
#[derive(Serialize)]
pub struct ReportDocument {
    pub meta: Meta,
    pub suites: Vec<SuiteReport>,
}

impl ReportDocument {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }
}

/// Coefficient dump for one polynomial.
#[derive(Serialize)]
pub struct GenDocument {
    pub meta: Meta,
    pub family: String,
    pub n: u32,
    pub degree: u32,
    pub leading: String,
    pub value_at_0: String,
    pub value_at_1: String,
    pub coefficients: Vec<Coefficient>,
}

#[derive(Serialize)]
pub struct Coefficient {
    pub t: usize,
    pub num: String,
    pub den: String,
}

/// Root isolation output for one index.
#[derive(Serialize)]
pub struct RootsDocument {
    pub meta: Meta,
    pub width_bits: u32,
    pub root_report: RootReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interlacing_with_previous: Option<bool>,
    pub suites: Vec<SuiteReport>,
}
