//! Verification reports.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{Mode, Outcome, QDomain};

/// The outcome of checking one identity on one representation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    /// Equation tag such as `"Eq26"`.
    pub equation: String,
    pub mode: Mode,
    /// The representation the check ran on, e.g. `"twoJ=4"`.
    pub subject: String,
    pub domain: String,
    /// 0 for an exact pass; `None` if the check could not be evaluated.
    pub max_residual: Option<f64>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn from_outcome<D: QDomain>(
        dom: &D,
        identity: &str,
        equation: &str,
        subject: &str,
        outcome: Outcome,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            equation: equation.to_string(),
            mode: dom.mode(),
            subject: subject.to_string(),
            domain: dom.describe(),
            max_residual: Some(outcome.residual),
            pass: outcome.pass,
            note: None,
        }
    }

    /// Records a check that could not be carried out.
    pub fn errored<D: QDomain>(dom: &D, identity: &str, equation: &str, subject: &str, err: &Error) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            equation: equation.to_string(),
            mode: dom.mode(),
            subject: subject.to_string(),
            domain: dom.describe(),
            max_residual: None,
            pass: false,
            note: Some(err.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Compares `lhs` and `rhs` in `dom` and packages the result.
pub fn check<D: QDomain>(
    dom: &D,
    identity: &str,
    equation: &str,
    subject: &str,
    lhs: &Matrix<D::Elem>,
    rhs: &Matrix<D::Elem>,
) -> VerificationReport {
    VerificationReport::from_outcome(dom, identity, equation, subject, dom.compare(lhs, rhs))
}

/// Runs several comparisons and reports them as one identity (all must pass).
pub fn check_all<D: QDomain>(
    dom: &D,
    identity: &str,
    equation: &str,
    subject: &str,
    pairs: &[(Matrix<D::Elem>, Matrix<D::Elem>)],
) -> VerificationReport {
    let outcome = pairs.iter().map(|(l, r)| dom.compare(l, r)).fold(
        Outcome { residual: 0.0, scale: 0.0, pass: true },
        |acc, o| Outcome {
            residual: acc.residual.max(o.residual),
            scale: acc.scale.max(o.scale),
            pass: acc.pass && o.pass,
        },
    );
    VerificationReport::from_outcome(dom, identity, equation, subject, outcome)
}

/// Turns a fallible check into a report.
pub fn report_or_error<D: QDomain>(
    dom: &D,
    identity: &str,
    equation: &str,
    subject: &str,
    result: crate::Result<VerificationReport>,
) -> VerificationReport {
    result.unwrap_or_else(|e| VerificationReport::errored(dom, identity, equation, subject, &e))
}

pub fn all_pass(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
