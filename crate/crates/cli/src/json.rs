use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use cosys::cosystole::{Certificate, WeightVector};
use cosys::BinaryMatroid;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualTerm {
    pub cocircuits: Vec<Vec<String>>,
    pub multiplier: String,
}

/// Machine-readable invariant output; rationals are `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub matroid: String,
    pub invariant: String,
    pub value: String,
    pub weights: IndexMap<String, String>,
    pub dual: Vec<DualTerm>,
    pub elapsed_ms: u64,
}

fn weight_map(m: &BinaryMatroid, w: &WeightVector) -> IndexMap<String, String> {
    w.labelled(m).map(|(l, v)| (l.to_string(), v.to_string())).collect()
}

impl InvariantReport {
    pub fn from_certificate(name: &str, m: &BinaryMatroid, cert: &Certificate, elapsed_ms: u64) -> Self {
        InvariantReport {
            matroid: name.to_string(),
            invariant: cert.invariant.json_name().to_string(),
            value: cert.value.to_string(),
            weights: weight_map(m, &cert.weights),
            dual: cert
                .dual
                .iter()
                .map(|(sets, l)| DualTerm {
                    cocircuits: sets
                        .iter()
                        .map(|&c| m.set_labels(c).into_iter().map(String::from).collect())
                        .collect(),
                    multiplier: l.to_string(),
                })
                .collect(),
            elapsed_ms,
        }
    }

    /// A weighted value: no dual, `invariant` is `sys` or `sys3`.
    pub fn weighted(name: &str, invariant: &str, m: &BinaryMatroid, w: &WeightVector, value: String, elapsed_ms: u64) -> Self {
        InvariantReport {
            matroid: name.to_string(),
            invariant: invariant.to_string(),
            value,
            weights: weight_map(m, w),
            dual: Vec::new(),
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
