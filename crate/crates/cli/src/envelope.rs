//! JSON result envelope shared by every command.

use std::collections::BTreeMap;

use evenpair::coloring::{Coloring, ContractionTrace};
use evenpair::io::write_dimacs;
use evenpair::oracles::{Snake, Witness};
use evenpair::{EvenPairResult, Graph};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultEnvelope {
    pub schema_version: u32,
    /// `sha256:` followed by the hex digest of the canonical DIMACS text.
    pub input_digest: String,
    pub command: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

/// Result of `evenpair --audit`. Oracle fields are absent when the graph
/// exceeds their size guard; `skipped` then says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAudit {
    pub structural: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even_pair: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proper_snake: Option<Snake>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    Pair {
        result: EvenPairResult,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        audit: Option<PairAudit>,
    },
    Coloring {
        coloring: Coloring,
        trace: ContractionTrace,
        omega: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chromatic_number: Option<usize>,
        trace_verified: bool,
    },
    Witness {
        in_class: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    },
    Diagnostic {
        code: String,
        message: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        detail: Option<Value>,
    },
    Oracle {
        op: String,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        args: Vec<String>,
        result: Value,
    },
    Verification {
        valid: bool,
        problems: Vec<String>,
    },
}

pub fn input_digest(g: &Graph) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(write_dimacs(g).as_bytes())))
}

impl ResultEnvelope {
    pub fn new(g: &Graph, command: &str, outcome: Outcome) -> Self {
        ResultEnvelope {
            schema_version: SCHEMA_VERSION,
            input_digest: input_digest(g),
            command: command.to_string(),
            outcome,
            timings: None,
        }
    }

    /// Pretty JSON with keys sorted at every level, newline-terminated.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("envelope serializes");
        let mut s = serde_json::to_string_pretty(&sorted(value)).expect("value serializes");
        s.push('\n');
        s
    }
}

/// Rebuilds every object with its keys in ascending order.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use evenpair::named_instance;

    #[test]
    fn keys_are_sorted() {
        let g = named_instance("c6").unwrap();
        let r = evenpair::find_special_even_pair(&g).unwrap();
        let env = ResultEnvelope::new(&g, "evenpair", Outcome::Pair { result: r, audit: None });
        let json = env.to_json();
        let top: Vec<&str> = json
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(top, ["command", "input_digest", "outcome", "schema_version"]);
        let back: ResultEnvelope = serde_json::from_str(&json).unwrap();
        assert_eq!(back, env);
    }

    #[test]
    fn pair_is_one_based() {
        let g = named_instance("c6").unwrap();
        let r = evenpair::find_special_even_pair(&g).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["pair"], serde_json::json!([2, 6]));
    }

    #[test]
    fn digest_ignores_comments_and_edge_order() {
        let a = evenpair::io::parse_dimacs("c x\np edge 3 2\ne 2 3\ne 1 2\n").unwrap();
        let b = evenpair::io::parse_dimacs("p edge 3 2\ne 1 2\ne 3 2\n").unwrap();
        assert_eq!(input_digest(&a), input_digest(&b));
        assert!(input_digest(&a).starts_with("sha256:"));
    }

    #[test]
    fn coloring_round_trips() {
        let g = named_instance("c6").unwrap();
        let (coloring, trace) = evenpair::coloring::color(&g).unwrap();
        let env = ResultEnvelope::new(
            &g,
            "color",
            Outcome::Coloring { coloring, trace, omega: 2, chromatic_number: Some(2), trace_verified: false },
        );
        let back: ResultEnvelope = serde_json::from_str(&env.to_json()).unwrap();
        assert_eq!(back, env);
    }
}
