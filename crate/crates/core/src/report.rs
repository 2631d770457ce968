//! Identity checks and their machine-readable reports.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::ring::RationalFunction;

/// One claimed equality between two exact values.
#[derive(Clone, Debug)]
pub struct Identity {
    pub label: String,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
}

impl Identity {
    pub fn new(label: impl Into<String>, lhs: RationalFunction, rhs: RationalFunction) -> Identity {
        Identity { label: label.into(), lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs.ratfun_eq(&self.rhs)
    }
}

/// Outcome of a theorem check: the headline identity plus any cross-checks
/// computed along the way.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub theorem: String,
    pub main: Identity,
    pub auxiliary: Vec<Identity>,
}

impl CheckResult {
    pub fn new(theorem: impl Into<String>, main: Identity) -> CheckResult {
        CheckResult { theorem: theorem.into(), main, auxiliary: Vec::new() }
    }

    pub fn with(mut self, aux: Identity) -> CheckResult {
        self.auxiliary.push(aux);
        self
    }

    /// True iff the headline identity and every cross-check hold.
    pub fn passed(&self) -> bool {
        self.main.holds() && self.auxiliary.iter().all(Identity::holds)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Serializable record of one verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(default)]
    pub checks: Vec<SubCheck>,
}

impl VerificationReport {
    pub fn from_check(check: &CheckResult, inputs: BTreeMap<String, String>, elapsed: Duration) -> VerificationReport {
        VerificationReport {
            theorem: check.theorem.clone(),
            inputs,
            lhs: check.main.lhs.render(),
            rhs: check.main.rhs.render(),
            pass: check.passed(),
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            checks: check
                .auxiliary
                .iter()
                .map(|id| SubCheck { name: id.label.clone(), lhs: id.lhs.render(), rhs: id.rhs.render(), pass: id.holds() })
                .collect(),
        }
    }

    /// Plain-text rendering, one field per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", if self.pass { "PASS" } else { "FAIL" }, self.theorem);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        out.push_str(&format!("  lhs: {}\n  rhs: {}\n", self.lhs, self.rhs));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}\n    lhs: {}\n    rhs: {}\n",
                if c.pass { "ok" } else { "FAILED" },
                c.name,
                c.lhs,
                c.rhs
            ));
        }
        out.push_str(&format!("  time: {:.2} ms\n", self.elapsed_ms));
        out
    }
}
