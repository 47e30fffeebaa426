//! Machine-readable verification outcomes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// One offending location. Indices are 1-based, matching the usual
/// numbering of node functionals and basis functions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(check: impl Into<String>, indices: Vec<usize>, detail: impl Into<String>) -> Self {
        Witness {
            check: check.into(),
            indices,
            detail: detail.into(),
        }
    }
}

/// Pass/fail record for one property at one parameter point. A failed
/// report always carries at least one witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: String,
    pub parameters: BTreeMap<String, usize>,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn new(property: impl Into<String>) -> Self {
        VerificationReport {
            property: property.into(),
            parameters: BTreeMap::new(),
            passed: true,
            witnesses: Vec::new(),
        }
    }

    pub fn with_param(mut self, name: &str, value: usize) -> Self {
        self.parameters.insert(name.to_string(), value);
        self
    }

    pub fn fail(&mut self, witness: Witness) {
        self.passed = false;
        self.witnesses.push(witness);
    }

    /// Records a failure under `check` unless `ok`.
    pub fn require(&mut self, ok: bool, check: &str, indices: Vec<usize>, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(Witness::new(check, indices, detail()));
        }
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        let mut checks: Vec<&str> = self.witnesses.iter().map(|w| w.check.as_str()).collect();
        checks.dedup();
        checks
    }

    pub fn has_failure(&self, check: &str) -> bool {
        self.witnesses.iter().any(|w| w.check == check)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} [{}] {}",
            self.property,
            params.join(", "),
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for w in self.witnesses.iter().take(5) {
            write!(f, "\n  {} at {:?}: {}", w.check, w.indices, w.detail)?;
        }
        if self.witnesses.len() > 5 {
            write!(f, "\n  ... {} more", self.witnesses.len() - 5)?;
        }
        Ok(())
    }
}
