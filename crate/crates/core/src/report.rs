//! Pass/fail records for verification scenarios.

use std::fmt;

use serde::Serialize;

use crate::algebra::Scalar;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn bool(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            first_mismatch: None,
            detail: None,
        }
    }

    /// Compares two sequences entrywise, recording the first differing index.
    pub fn sequences<S: Scalar>(name: impl Into<String>, got: &[S], expected: &[S]) -> Self {
        let first_mismatch = got.iter().zip(expected).position(|(a, b)| a != b);
        let detail = match first_mismatch {
            Some(i) => Some(format!("index {i}: got {}, expected {}", got[i], expected[i])),
            None if got.len() != expected.len() => Some(format!("length {} vs expected {}", got.len(), expected.len())),
            None => None,
        };
        let mismatch = first_mismatch.or_else(|| (got.len() != expected.len()).then(|| got.len().min(expected.len())));
        Self {
            name: name.into(),
            passed: detail.is_none(),
            first_mismatch: mismatch,
            detail,
        }
    }

    /// Compares two triangles row by row; the mismatch index is the row.
    pub fn rows<S: Scalar>(name: impl Into<String>, got: &[Vec<S>], expected: &[Vec<S>]) -> Self {
        let name = name.into();
        if got.len() != expected.len() {
            return Self {
                name,
                passed: false,
                first_mismatch: Some(got.len().min(expected.len())),
                detail: Some(format!("{} rows vs expected {}", got.len(), expected.len())),
            };
        }
        for (i, (g, e)) in got.iter().zip(expected).enumerate() {
            let row = Check::sequences("", g, e);
            if !row.passed {
                return Self {
                    name,
                    passed: false,
                    first_mismatch: Some(i),
                    detail: Some(format!("row {i}: {}", row.detail.unwrap_or_default())),
                };
            }
        }
        Self::bool(name, true)
    }

    pub fn error(name: impl Into<String>, err: &Error) -> Self {
        Self {
            name: name.into(),
            passed: false,
            first_mismatch: None,
            detail: Some(err.to_string()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl ScenarioReport {
    pub fn new(scenario: impl Into<String>) -> Self {
        Self {
            scenario: scenario.into(),
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: ScenarioReport) {
        for mut check in other.checks {
            check.name = format!("{}: {}", other.scenario, check.name);
            self.push(check);
        }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            write!(f, "[{}] {}", if check.passed { "PASS" } else { "FAIL" }, check.name)?;
            if let Some(d) = &check.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        let total = self.checks.len();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{}: {ok}/{total} checks passed", self.scenario)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn sequence_mismatch() {
        let c = Check::sequences("s", &[int(1), int(2), int(3)], &[int(1), int(5), int(3)]);
        assert!(!c.passed);
        assert_eq!(c.first_mismatch, Some(1));
        let c = Check::sequences("s", &[int(1)], &[int(1), int(2)]);
        assert_eq!((c.passed, c.first_mismatch), (false, Some(1)));
        assert!(Check::sequences("s", &[int(4)], &[int(4)]).passed);
    }

    #[test]
    fn report_aggregates() {
        let mut r = ScenarioReport::new("demo");
        r.push(Check::bool("a", true));
        assert!(r.passed());
        r.push(Check::rows(
            "b",
            &[vec![int(1)], vec![int(2), int(1)]],
            &[vec![int(1)], vec![int(3), int(1)]],
        ));
        assert!(!r.passed());
        assert_eq!(r.checks[1].first_mismatch, Some(1));
        assert!(r.to_string().ends_with("demo: 1/2 checks passed"));
        assert!(r.to_json().contains("\"first_mismatch\": 1"));
    }
}
