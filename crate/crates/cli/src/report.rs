use std::fmt::Write as _;

use serde::Serialize;

/// One identity checked over one parameter range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub identity: String,
    pub range: String,
    pub passed: bool,
    /// First failing parameter set, or the error that stopped the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckRow {
    pub fn new(
        suite: &str,
        identity: impl Into<String>,
        range: impl Into<String>,
        outcome: Result<(), String>,
    ) -> Self {
        CheckRow {
            suite: suite.to_string(),
            identity: identity.into(),
            range: range.into(),
            passed: outcome.is_ok(),
            counterexample: outcome.err(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub rows: Vec<CheckRow>,
    pub passed: bool,
}

impl CheckReport {
    pub fn new(rows: Vec<CheckRow>) -> Self {
        let passed = rows.iter().all(|r| r.passed);
        CheckReport { rows, passed }
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let status = if row.passed { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "[{status}] {}: {} ({})",
                row.suite, row.identity, row.range
            );
            if let Some(c) = &row.counterexample {
                let _ = write!(out, "; first counterexample: {c}");
            }
            out.push('\n');
        }
        let total = self.rows.len();
        let _ = writeln!(
            out,
            "overall: {} ({} of {total} identities passed)",
            if self.passed { "PASS" } else { "FAIL" },
            total - self.failures()
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
