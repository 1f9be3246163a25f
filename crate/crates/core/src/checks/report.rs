use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Appended to every report whose claim is a homotopy equivalence.
pub const HOMOLOGY_LEVEL_NOTE: &str =
    "verified on integral homology; homology equivalence does not by itself imply homotopy equivalence";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one validator on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub theorem: String,
    pub params: Value,
    pub verdict: Verdict,
    pub evidence: Value,
    /// Always present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl TheoremReport {
    pub fn pass(theorem: &str, params: Value, evidence: Value) -> TheoremReport {
        TheoremReport {
            schema_version: crate::SCHEMA_VERSION,
            theorem: theorem.to_string(),
            params,
            verdict: Verdict::Pass,
            evidence,
            counterexample: None,
            note: String::new(),
        }
    }

    pub fn fail(theorem: &str, params: Value, evidence: Value, counterexample: Value) -> TheoremReport {
        TheoremReport {
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            ..TheoremReport::pass(theorem, params, evidence)
        }
    }

    /// Pass when `ok`, otherwise fail with `counterexample`.
    pub fn decide(theorem: &str, params: Value, evidence: Value, ok: bool, counterexample: impl FnOnce() -> Value) -> TheoremReport {
        if ok {
            TheoremReport::pass(theorem, params, evidence)
        } else {
            TheoremReport::fail(theorem, params, evidence, counterexample())
        }
    }

    pub fn with_note(mut self, note: &str) -> TheoremReport {
        self.note = note.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
