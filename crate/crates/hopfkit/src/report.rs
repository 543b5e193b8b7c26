//! Structured verification reports.
//!
//! Every verification routine returns a [`CheckReport`]: a named list of
//! individual checks, each tagged with a stable formula identifier, a
//! verdict and (on failure) a witness describing the basis elements where
//! the identity broke. Reports aggregate into a [`Report`] bundle that is
//! deterministic for identical inputs and seeds, and whose JSON form
//! round-trips through its own parser.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One verified identity.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Stable identifier of the identity being checked, e.g. `morita-compat-left`.
    pub formula: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: &str, formula: &str) -> Self {
        Check {
            name: name.into(),
            formula: formula.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: &str, formula: &str, witness: String) -> Self {
        Check {
            name: name.into(),
            formula: formula.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

/// The outcome of one verification stage.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub name: String,
    pub checks: Vec<Check>,
    /// Named dimensions observed during the stage (basis sizes, ranks).
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub dims: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Records a pass/fail verdict; the witness is only kept on failure.
    pub fn record(&mut self, name: &str, formula: &str, passed: bool, witness: impl FnOnce() -> String) {
        if passed {
            self.push(Check::pass(name, formula));
        } else {
            self.push(Check::fail(name, formula, witness()));
        }
    }

    pub fn dim(&mut self, name: &str, value: usize) {
        self.dims.insert(name.into(), value);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Merges another report's checks into this one, prefixing their names.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.name, c.name);
            self.checks.push(c);
        }
        for (k, v) in other.dims {
            self.dims.insert(format!("{}/{}", other.name, k), v);
        }
        for n in other.notes {
            self.notes.push(format!("{}: {}", other.name, n));
        }
    }
}

/// Digest of an input file, recorded for reproducibility.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

/// A full certificate bundle: tool version, input digests, stage
/// reports and the overall verdict.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub tool: String,
    pub version: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<usize>,
    pub stages: Vec<CheckReport>,
    pub overall: bool,
}

impl Report {
    pub fn new(tool: &str) -> Self {
        Report {
            tool: tool.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            inputs: Vec::new(),
            seed: None,
            samples: None,
            stages: Vec::new(),
            overall: true,
        }
    }

    pub fn push_stage(&mut self, stage: CheckReport) {
        self.overall &= stage.all_passed();
        self.stages.push(stage);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} v{}", self.tool, self.version);
        for input in &self.inputs {
            let _ = writeln!(out, "input {} sha256:{}", input.name, input.sha256);
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed {seed}");
        }
        if let Some(samples) = self.samples {
            let _ = writeln!(out, "samples {samples}");
        }
        for stage in &self.stages {
            let verdict = if stage.all_passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{verdict}] stage {}", stage.name);
            for (k, v) in &stage.dims {
                let _ = writeln!(out, "       dim {k} = {v}");
            }
            for note in &stage.notes {
                let _ = writeln!(out, "       note {note}");
            }
            for check in &stage.checks {
                let mark = if check.passed { "ok " } else { "FAIL" };
                let _ = write!(out, "  {mark} {} [{}]", check.name, check.formula);
                if let Some(w) = &check.witness {
                    let _ = write!(out, " witness: {w}");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "overall: {}", if self.overall { "PASS" } else { "FAIL" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips_through_own_parser() {
        let mut report = Report::new("verify-hopf");
        report.seed = Some(42);
        let mut stage = CheckReport::new("bialgebra");
        stage.record("assoc", "mult-assoc", true, String::new);
        stage.record("coassoc", "comult-coassoc", false, || "basis g".into());
        stage.dim("dim", 4);
        report.push_stage(stage);
        let json = report.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back, report);
        assert!(!back.overall);
    }

    #[test]
    fn text_rendering_is_deterministic() {
        let mut report = Report::new("t");
        report.push_stage(CheckReport::new("s"));
        assert_eq!(report.to_text(), report.to_text());
    }
}
