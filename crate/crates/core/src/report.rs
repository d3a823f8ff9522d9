//! Pass/fail reports with concrete counterexamples.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::tensor::SparseTensor;

/// One nonzero coefficient of a witness tensor, rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub c: String,
    pub index: Vec<usize>,
}

/// The basis tuple on which an identity failed, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input_labels: Vec<String>,
    pub inputs: Vec<usize>,
    pub lhs: Vec<TermEntry>,
    pub lhs_dims: Vec<usize>,
    pub rhs: Vec<TermEntry>,
    pub rhs_dims: Vec<usize>,
}

impl Witness {
    pub fn new<F: Scalar>(inputs: Vec<usize>, input_labels: Vec<String>, lhs: &SparseTensor<F>, rhs: &SparseTensor<F>) -> Self {
        Witness {
            input_labels,
            inputs,
            lhs: render(lhs),
            lhs_dims: lhs.dims().to_vec(),
            rhs: render(rhs),
            rhs_dims: rhs.dims().to_vec(),
        }
    }
}

/// Exact rendering of a tensor's nonzero entries in index order.
pub fn render<F: Scalar>(t: &SparseTensor<F>) -> Vec<TermEntry> {
    t.iter()
        .map(|(k, c)| TermEntry { c: c.to_exact_string(), index: k.to_vec() })
        .collect()
}

/// Outcome of one identity checked over a family of basis tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub cases: usize,
    pub label: String,
    pub passed: bool,
    pub statement: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: bool,
    pub subject: String,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport { checks: Vec::new(), passed: true, subject: subject.into() }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn push(&mut self, check: Check) {
        debug_assert!(check.passed || check.witness.is_some() || check.cases == 0);
        self.passed &= check.passed;
        self.checks.push(check);
    }

    /// Checks `lhs == rhs` on every tuple of the cartesian product of `slots`.
    ///
    /// Each slot lists the basis labels of one input; the first failing tuple
    /// becomes the witness. Returns whether the check passed.
    pub fn check<F, E>(&mut self, label: &str, statement: &str, slots: &[&[String]], mut eval: E) -> bool
    where
        F: Scalar,
        E: FnMut(&[usize]) -> (SparseTensor<F>, SparseTensor<F>),
    {
        let mut cases = 0;
        let mut witness = None;
        let tuples: Box<dyn Iterator<Item = Vec<usize>>> = if slots.is_empty() {
            Box::new(std::iter::once(Vec::new()))
        } else {
            Box::new(slots.iter().map(|s| 0..s.len()).multi_cartesian_product())
        };
        for tuple in tuples {
            cases += 1;
            let (lhs, rhs) = eval(&tuple);
            if lhs != rhs {
                let labels = tuple.iter().zip(slots).map(|(&i, s)| s[i].clone()).collect();
                witness = Some(Witness::new(tuple, labels, &lhs, &rhs));
                break;
            }
        }
        let passed = witness.is_none();
        self.push(Check {
            cases,
            label: label.to_string(),
            passed,
            statement: statement.to_string(),
            witness,
        });
        passed
    }

    /// Folds a sub-report into a single entry carrying its first witness.
    pub fn absorb(&mut self, label: &str, statement: &str, sub: &VerificationReport) {
        let witness = sub.checks.iter().find(|c| !c.passed).and_then(|c| c.witness.clone());
        self.push(Check {
            cases: sub.checks.iter().map(|c| c.cases).sum(),
            label: label.to_string(),
            passed: sub.passed,
            statement: statement.to_string(),
            witness,
        });
    }

    /// Appends all entries of `other`, prefixing their labels.
    pub fn extend_prefixed(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.label = format!("{prefix}{}", c.label);
            self.push(c);
        }
    }

    pub fn get(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {} ({} cases)", if c.passed { "ok" } else { "FAIL" }, c.label, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, " witness inputs {:?}", w.input_labels)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn failing_check_carries_witness() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let mut r = VerificationReport::new("demo");
        let ok = r.check::<Rational, _>("id", "x = x", &[&labels], |t| {
            let v = SparseTensor::basis_vector(2, t[0]);
            (v.clone(), v)
        });
        assert!(ok);
        let ok = r.check::<Rational, _>("bad", "x = e0", &[&labels], |t| {
            (SparseTensor::basis_vector(2, t[0]), SparseTensor::basis_vector(2, 0))
        });
        assert!(!ok);
        assert!(!r.passed());
        let w = r.get("bad").unwrap().witness.as_ref().unwrap();
        assert_eq!(w.inputs, vec![1]);
        assert_eq!(w.input_labels, vec!["b"]);
        assert_eq!(w.lhs, vec![TermEntry { c: "1/1".into(), index: vec![1] }]);
    }

    #[test]
    fn absorb_keeps_first_witness() {
        let labels = vec!["x".to_string()];
        let mut sub = VerificationReport::new("sub");
        sub.check::<Rational, _>("f", "", &[&labels], |_| {
            (SparseTensor::scalar(Rational::from_i64(1)), SparseTensor::scalar(Rational::from_i64(2)))
        });
        let mut r = VerificationReport::new("top");
        r.absorb("folded", "", &sub);
        assert!(!r.passed());
        assert!(r.get("folded").unwrap().witness.is_some());
    }
}
