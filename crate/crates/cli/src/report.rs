//! Text and JSON reports.

use alexmod_core::module::roots_of_unity_audit;
use alexmod_core::{AbelianGroup, LaurentModule};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input_sha256: String,
    pub results: Vec<Entry>,
    pub warnings: Vec<String>,
    pub hypotheses: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        Report {
            command: command.into(),
            input_sha256: hex::encode(Sha256::digest(input)),
            results: Vec::new(),
            warnings: Vec::new(),
            hypotheses: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push(Entry {
            key: key.into(),
            value: value.to_string(),
            data: None,
        });
    }

    pub fn push_data(&mut self, key: impl Into<String>, value: impl ToString, data: Value) {
        self.results.push(Entry {
            key: key.into(),
            value: value.to_string(),
            data: Some(data),
        });
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    pub fn hypothesis(&mut self, h: impl Into<String>) {
        self.hypotheses.push(h.into());
    }

    pub fn value(&self, key: &str) -> Option<&str> {
        self.results.iter().find(|e| e.key == key).map(|e| e.value.as_str())
    }

    /// Adds a module entry with its structured form and audit warnings.
    pub fn push_module(&mut self, key: &str, m: &LaurentModule, bound: u64) {
        let (divs, complete) = m.elementary_divisors(bound);
        let data = json!({
            "free_rank": m.free_rank(),
            "field_order": m.field_order(),
            "invariant_factors": m.invariant_factors().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "elementary_divisors": divs
                .iter()
                .map(|(p, k)| json!({"factor": p.to_string(), "exponent": k}))
                .collect::<Vec<_>>(),
            "complete": complete,
        });
        self.push_data(key, m.render(bound), data);
        if !complete {
            self.warn(format!("{key}: factorization incomplete, unresolved factors kept whole"));
        }
        for p in roots_of_unity_audit(m, bound) {
            self.warn(format!("{key}: factor {p} has a root that is not a root of unity of order <= {bound}"));
        }
    }

    pub fn push_group(&mut self, key: &str, g: &AbelianGroup) {
        let data = json!({
            "rank": g.rank,
            "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        });
        self.push_data(key, g, data);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Text => {
                let mut out = format!("command: {}\ninput sha256: {}\n", self.command, self.input_sha256);
                for e in &self.results {
                    out.push_str(&format!("{}: {}\n", e.key, e.value));
                }
                for w in &self.warnings {
                    out.push_str(&format!("WARN: {w}\n"));
                }
                for h in &self.hypotheses {
                    out.push_str(&format!("hypothesis: {h}\n"));
                }
                out
            }
        }
    }
}
