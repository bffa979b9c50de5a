//! The JSON result document printed on standard output.

use std::collections::BTreeMap;

use colorconn::verifiers::PathWitness;
use colorconn::{Color, EdgeColoring, Graph, VertexId};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::document::{EdgeEntry, GraphDocument};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub vertices: Vec<String>,
    pub colors: Vec<Color>,
}

impl WitnessDoc {
    pub fn new(graph: &Graph, w: &PathWitness) -> Self {
        Self {
            vertices: w
                .vertices
                .iter()
                .map(|&v| graph.label(v).to_string())
                .collect(),
            colors: w.colors.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    /// The command line words after the program name.
    pub command: Vec<String>,
    /// SHA-256 of every input file, keyed by path.
    pub inputs: BTreeMap<String, String>,
    /// Set for decision commands only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<EdgeEntry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    pub elapsed_ms: u64,
}

impl ResultDocument {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            inputs: BTreeMap::new(),
            verdict: None,
            value: None,
            failing_pair: None,
            witnesses: Vec::new(),
            coloring: None,
            details: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.insert(path.to_string(), sha256_hex(bytes));
    }

    pub fn detail(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn pair(&mut self, graph: &Graph, (s, t): (VertexId, VertexId)) {
        self.failing_pair = Some((graph.label(s).to_string(), graph.label(t).to_string()));
    }

    pub fn set_coloring(&mut self, graph: &Graph, coloring: &EdgeColoring) {
        self.coloring = Some(GraphDocument::from_graph(graph, Some(coloring)).edges);
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("results always serialize");
        text.push('\n');
        text
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
