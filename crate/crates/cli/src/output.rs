//! The JSON report document and its summary.

use std::io::Write;
use std::path::Path;

use anyhow::Context;
use qhdeform::VerificationReport;
use serde::Serialize;

use crate::config::NumericPoint;

/// Bumped whenever the document layout changes.
pub const SCHEMA_VERSION: u32 = 1;

/// Everything that determines a run's results. No timestamps, so identical
/// configurations give byte-identical documents.
#[derive(Clone, Debug, Serialize)]
pub struct Environment {
    pub crate_version: &'static str,
    pub kronecker_order: &'static str,
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub points: Vec<NumericPoint>,
    pub tol_abs: f64,
    pub tol_rel: f64,
    /// Highest power kept in each terminating series.
    pub truncation_orders: Vec<TruncationOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturbed_alpha: Option<usize>,
}

impl Environment {
    pub fn new(points: Vec<NumericPoint>) -> Self {
        let (tol_abs, tol_rel) = points
            .first()
            .map(|p| (p.tol_abs, p.tol_rel))
            .unwrap_or((qhdeform::NumericContext::DEFAULT_TOL_ABS, qhdeform::NumericContext::DEFAULT_TOL_REL));
        Environment {
            crate_version: env!("CARGO_PKG_VERSION"),
            kronecker_order: "left-slow",
            mode: None,
            seed: None,
            points,
            tol_abs,
            tol_rel,
            truncation_orders: Vec::new(),
            perturbed_alpha: None,
        }
    }

    pub fn with_spins(mut self, spins: impl IntoIterator<Item = u32>) -> Self {
        self.truncation_orders = spins
            .into_iter()
            .map(|tj| TruncationOrder { subject: format!("twoJ={tj}"), order: tj as usize })
            .collect();
        self
    }
}

/// Series in the raising generator stop at `dim - 1`; coefficient tables at `N`.
#[derive(Clone, Debug, Serialize)]
pub struct TruncationOrder {
    pub subject: String,
    pub order: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let failures: Vec<String> = reports
            .iter()
            .filter(|r| !r.pass)
            .map(|r| format!("{} {} [{}] {}", r.equation, r.identity, r.subject, r.domain))
            .collect();
        Summary { total: reports.len(), passed: reports.len() - failures.len(), failed: failures.len(), failures }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub environment: Environment,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<T>,
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(command: &str, environment: Environment, tables: Option<T>, reports: Vec<VerificationReport>) -> Self {
        let summary = Summary::of(&reports);
        ReportDocument { schema_version: SCHEMA_VERSION, command: command.to_string(), environment, tables, reports, summary }
    }

    /// Writes the document to `path`, or to stdout when `path` is `None`.
    pub fn emit(&self, path: Option<&Path>) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        match path {
            Some(p) => {
                if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                }
                std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))
            }
            None => Ok(std::io::stdout().write_all(text.as_bytes())?),
        }
    }
}

/// One line per failing report on stderr, then the totals.
pub fn print_summary(command: &str, s: &Summary) {
    for f in &s.failures {
        eprintln!("FAIL {f}");
    }
    eprintln!("{command}: {}/{} checks passed", s.passed, s.total);
}
