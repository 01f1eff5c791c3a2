//! Check verdicts and failure witnesses shared by every verification routine.

use serde::{Deserialize, Serialize};

use crate::graded::{format_vec, Scalar};

/// Hard cap on stored witnesses per check, to keep reports bounded.
pub const MAX_WITNESSES: usize = 256;

/// A basis tuple on which an identity failed, with both sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    /// Number of failing tuples found (may exceed the stored witnesses).
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            passed: true,
            failures: 0,
            witnesses: Vec::new(),
            note: None,
        }
    }

    /// A check whose verdict was computed elsewhere.
    pub fn verdict(name: impl Into<String>, anchor: impl Into<String>, passed: bool) -> Self {
        let mut c = Check::new(name, anchor);
        c.passed = passed;
        if !passed {
            c.failures = 1;
        }
        c
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records a failure unless `lhs == rhs`.
    pub fn compare<S: ToString>(&mut self, tuple: &[S], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(tuple, lhs, rhs);
        false
    }

    /// Records a failure unless `value` is zero.
    pub fn expect_zero<S: ToString>(&mut self, tuple: &[S], value: &[Scalar]) -> bool {
        if crate::graded::is_zero_vec(value) {
            return true;
        }
        let zero = crate::graded::zero_vec(value.len());
        self.fail(tuple, value, &zero);
        false
    }

    pub fn fail<S: ToString>(&mut self, tuple: &[S], lhs: &[Scalar], rhs: &[Scalar]) {
        self.passed = false;
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                tuple: tuple.iter().map(ToString::to_string).collect(),
                lhs: format_vec(lhs),
                rhs: format_vec(rhs),
            });
        }
    }

    /// Keeps only the first witness.
    pub fn truncate_witnesses(&mut self) {
        self.witnesses.truncate(1);
    }
}

/// An ordered collection of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Appends every check of `other`, prefixing names with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}.{}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn sort_by_name(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::int;

    #[test]
    fn compare_records_first_failure() {
        let mut c = Check::new("t", "a");
        assert!(c.compare(&["x1"], &[int(1)], &[int(1)]));
        assert!(!c.compare(&["x2"], &[int(1)], &[int(2)]));
        assert!(!c.expect_zero(&["x3"], &[int(5)]));
        assert!(!c.passed);
        assert_eq!(c.failures, 2);
        assert_eq!(c.witnesses[0].tuple, vec!["x2"]);
        c.truncate_witnesses();
        assert_eq!(c.witnesses.len(), 1);
    }

    #[test]
    fn absorb_prefixes_names() {
        let mut inner = Report::new();
        inner.push(Check::verdict("jacobi", "a", true));
        let mut outer = Report::new();
        outer.absorb("dual", inner);
        assert!(outer.get("dual.jacobi").is_some());
        assert!(outer.passed());
    }
}
