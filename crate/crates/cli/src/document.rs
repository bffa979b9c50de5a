//! The JSON graph document read and written by every command.
//!
//! ```json
//! {
//!   "version": "colorconn-graph/1",
//!   "vertices": ["a", "b", "c"],
//!   "edges": [["a", "b", 1], ["b", "c", 2]]
//! }
//! ```
//!
//! Edges carry an optional color as a third element; a document is either
//! fully colored or fully uncolored. `roles` gives extra names for vertices
//! and `meta` describes the reduction that produced the graph.

use std::collections::BTreeMap;

use colorconn::reductions::GadgetGraph;
use colorconn::{Color, EdgeColoring, Graph};
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

pub const VERSION: &str = "colorconn-graph/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeEntry {
    Plain(String, String),
    Colored(String, String, Color),
}

impl EdgeEntry {
    pub fn ends(&self) -> (&str, &str) {
        match self {
            Self::Plain(a, b) | Self::Colored(a, b, _) => (a, b),
        }
    }

    pub fn color(&self) -> Option<Color> {
        match self {
            Self::Plain(..) => None,
            Self::Colored(_, _, c) => Some(*c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetMetaDoc {
    pub kind: String,
    pub num_vars: usize,
    pub num_clauses: usize,
    pub occurrences: Vec<usize>,
    /// Boundary edges by gadget name.
    pub entries: BTreeMap<String, Vec<(String, String)>>,
    pub vertex_sets: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roles: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GadgetMetaDoc>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> CliResult<Self> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.version != VERSION {
            return Err(CliError::Document(format!(
                "unsupported version `{}`, expected `{VERSION}`",
                doc.version
            )));
        }
        let colored = doc.edges.iter().filter(|e| e.color().is_some()).count();
        if colored != 0 && colored != doc.edges.len() {
            return Err(CliError::Document(
                "colored and uncolored edges are mixed".into(),
            ));
        }
        if doc.edges.iter().any(|e| e.color() == Some(0)) {
            return Err(CliError::Document("colors start at 1".into()));
        }
        Ok(doc)
    }

    /// Pretty JSON with fields in declaration order and a final newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn from_graph(graph: &Graph, coloring: Option<&EdgeColoring>) -> Self {
        let edges = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                let (a, b) = (graph.label(u).to_string(), graph.label(v).to_string());
                match coloring {
                    Some(f) => EdgeEntry::Colored(a, b, f.color(e)),
                    None => EdgeEntry::Plain(a, b),
                }
            })
            .collect();
        Self {
            version: VERSION.to_string(),
            vertices: graph.labels().to_vec(),
            edges,
            roles: BTreeMap::new(),
            meta: None,
        }
    }

    pub fn from_gadget(gadget: &GadgetGraph, coloring: Option<&EdgeColoring>) -> Self {
        let graph = &gadget.graph;
        let label = |v| graph.label(v).to_string();
        let mut doc = Self::from_graph(graph, coloring);
        doc.roles = gadget
            .aliases
            .iter()
            .map(|(name, &v)| (name.clone(), label(v)))
            .collect();
        let meta = &gadget.meta;
        doc.meta = Some(GadgetMetaDoc {
            kind: meta.kind.to_string(),
            num_vars: meta.num_vars,
            num_clauses: meta.num_clauses,
            occurrences: meta.occurrences.clone(),
            entries: gadget
                .entries
                .iter()
                .map(|g| {
                    let ends = g.edges.iter().map(|&e| {
                        let (u, v) = graph.edge(e);
                        (label(u), label(v))
                    });
                    (g.gadget.clone(), ends.collect())
                })
                .collect(),
            vertex_sets: gadget
                .vertex_sets
                .iter()
                .map(|(name, vs)| (name.clone(), vs.iter().map(|&v| label(v)).collect()))
                .collect(),
        });
        doc
    }

    pub fn is_colored(&self) -> bool {
        self.edges.first().is_some_and(|e| e.color().is_some())
    }

    pub fn graph(&self) -> CliResult<Graph> {
        let edges: Vec<(&str, &str)> = self.edges.iter().map(EdgeEntry::ends).collect();
        Ok(colorconn::build_graph(&self.vertices, &edges)?)
    }

    /// The graph with its coloring; fails on an uncolored document.
    pub fn colored_graph(&self) -> CliResult<(Graph, EdgeColoring)> {
        if !self.is_colored() && !self.edges.is_empty() {
            return Err(CliError::Document("edges carry no colors".into()));
        }
        let graph = self.graph()?;
        let colors = self.edges.iter().map(|e| e.color().unwrap_or(1)).collect();
        let coloring = EdgeColoring::new(&graph, colors)?;
        Ok((graph, coloring))
    }
}
