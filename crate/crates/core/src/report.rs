//! Machine-readable results of exhaustive verification runs and experiments.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Output of a verification suite or experiment. Every collection is sorted,
/// so the serialized form depends only on the parameters (and on
/// `runtime_ms`, which callers may clear for byte-stable output).
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub target: String,
    pub parameters: BTreeMap<String, Value>,
    pub totals: BTreeMap<String, u64>,
    pub per_form_counts: BTreeMap<String, u64>,
    /// Offending instances, rendered as text and sorted.
    pub counterexamples: Vec<String>,
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            target: target.into(),
            parameters: BTreeMap::new(),
            totals: BTreeMap::new(),
            per_form_counts: BTreeMap::new(),
            counterexamples: Vec::new(),
            runtime_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn add_total(&mut self, key: &str, n: u64) {
        *self.totals.entry(key.to_string()).or_default() += n;
    }

    pub fn add_form(&mut self, key: &str, n: u64) {
        *self.per_form_counts.entry(key.to_string()).or_default() += n;
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Sorts and deduplicates counterexamples and records the elapsed time.
    pub fn finish(mut self, started: Instant) -> Self {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.runtime_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    /// Folds `other` into `self`: totals and counts add, counterexamples are
    /// concatenated (prefixed by the other report's target) and re-sorted.
    pub fn absorb(&mut self, other: &VerificationReport) {
        for (k, v) in &other.totals {
            self.add_total(k, *v);
        }
        for (k, v) in &other.per_form_counts {
            self.add_form(&format!("{}/{k}", other.target), *v);
        }
        self.counterexamples.extend(
            other
                .counterexamples
                .iter()
                .map(|c| format!("{}: {c}", other.target)),
        );
        self.counterexamples.sort();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    /// Human-readable summary, one fact per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}", self.target);
        for (k, v) in &self.parameters {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
        for (k, v) in &self.totals {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for (k, v) in &self.per_form_counts {
            out.push_str(&format!("  form {k}: {v}\n"));
        }
        out.push_str(&format!("  counterexamples: {}\n", self.counterexamples.len()));
        for c in &self.counterexamples {
            out.push_str(&format!("    {c}\n"));
        }
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!("  runtime: {ms} ms\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new("demo").param("m", 2).param("L", 3);
        r.add_total("words", 5);
        r.add_total("words", 1);
        r.add_form("ABP", 2);
        r.counterexamples.push("b".into());
        r.counterexamples.push("a".into());
        let r = r.finish(Instant::now());
        assert_eq!(r.counterexamples, ["a", "b"]);
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema, 1);
        assert_eq!(back.totals["words"], 6);
        assert!(!back.passed());
    }
}
