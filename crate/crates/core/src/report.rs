//! Pass/fail records shared by the identity suites.

use std::fmt;

use crate::sparse::{Mismatch, SparseOperator};

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Failure locus, or extra information on success.
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: true, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: false, detail: Some(detail.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail)
        }
    }

    /// Compares two operators, recording the first differing entry.
    pub fn compare(name: impl Into<String>, left: &SparseOperator, right: &SparseOperator) -> Self {
        match left.first_mismatch(right) {
            None => Self::pass(name),
            Some(m) => Self::from_mismatch(name, &m),
        }
    }

    pub fn from_mismatch(name: impl Into<String>, m: &Mismatch) -> Self {
        Self::fail(name, m.to_string())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}", self.name)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}
