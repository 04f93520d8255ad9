//! Verification report plumbing shared by the CLI and the test suites:
//! individual check results with a four-state status, and a serializable
//! report with a summary. Serialized output is byte-stable for a fixed
//! seed and version (per-check runtimes are kept in memory only).

use serde::Serialize;
use std::time::Duration;

use crate::scalar::FieldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    /// The computed value matches the expectation.
    Pass,
    /// The computed value contradicts the expectation.
    Fail,
    /// An input taken on record without independent verification
    /// (only the Bezout product 27 in the multidegree assembly).
    Assumed,
    /// A recorded discrepancy between a printed table and the value this
    /// library derives and uses.
    Flagged,
}

/// One verification check: an identifier, its outcome, the expected and
/// actual values as strings, and a human-readable description of what was
/// checked.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub detail: String,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CheckResult {
    pub fn new(
        id: impl Into<String>,
        status: CheckStatus,
        expected: impl Into<String>,
        actual: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            id: id.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            detail: detail.into(),
            runtime: Duration::ZERO,
        }
    }

    /// Pass/fail from a boolean outcome.
    pub fn pass_fail(
        id: impl Into<String>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckResult::new(id, status, expected, actual, detail)
    }

    /// Runs `f`, recording its wall-clock runtime on the result.
    pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
        let start = std::time::Instant::now();
        let mut r = f();
        r.runtime = start.elapsed();
        r
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub assumed: usize,
    pub flagged: usize,
}

/// A full verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub field: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(seed: u64, field: FieldSpec, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => summary.fail += 1,
                CheckStatus::Assumed => summary.assumed += 1,
                CheckStatus::Flagged => summary.flagged += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            field: field.to_string(),
            checks,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Verification report\n\nversion {} · seed {} · field {}\n\n",
            self.version, self.seed, self.field
        ));
        out.push_str("| check | status | expected | actual |\n");
        out.push_str("|---|---|---|---|\n");
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Assumed => "assumed",
                CheckStatus::Flagged => "flagged",
            };
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                c.id,
                status,
                c.expected.replace('|', "\\|"),
                c.actual.replace('|', "\\|")
            ));
        }
        out.push_str(&format!(
            "\n{} pass, {} fail, {} assumed, {} flagged\n",
            self.summary.pass, self.summary.fail, self.summary.assumed, self.summary.flagged
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            7,
            FieldSpec::Q,
            vec![
                CheckResult::pass_fail("a/one", true, "1", "1", "first"),
                CheckResult::new("b/two", CheckStatus::Assumed, "27", "27", "taken on record"),
                CheckResult::new("c/three", CheckStatus::Flagged, "x", "y", "table differs"),
            ],
        )
    }

    #[test]
    fn summary_counts_statuses() {
        let r = sample();
        assert_eq!(
            r.summary,
            Summary {
                pass: 1,
                fail: 0,
                assumed: 1,
                flagged: 1
            }
        );
        assert!(!r.has_failures());
    }

    #[test]
    fn json_is_byte_stable_and_omits_runtime() {
        let a = sample().to_json();
        let mut with_time = sample();
        with_time.checks[0].runtime = Duration::from_millis(5);
        assert_eq!(a, with_time.to_json());
        assert!(!a.contains("runtime"));
        assert!(a.contains("\"summary\""));
    }

    #[test]
    fn markdown_mirrors_checks() {
        let md = sample().to_markdown();
        assert!(md.contains("| a/one | pass | 1 | 1 |"));
        assert!(md.contains("1 pass, 0 fail, 1 assumed, 1 flagged"));
    }
}
