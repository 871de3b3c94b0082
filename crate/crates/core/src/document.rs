//! On-disk coloring documents plus the CSV and DOT exports.
//!
//! Documents are JSON with one edge per line so fixtures diff cleanly:
//!
//! ```text
//! {
//!   "schema_version": 1,
//!   "n": 3,
//!   "k": 1,
//!   "edges": [
//!     [1, 2, 1],
//!     ...
//!   ]
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ColoredGraph, GraphError, Vertex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Compact record of how a construction was assembled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceSummary {
    pub case: String,
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<TraceSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub schema_version: u32,
    pub n: usize,
    pub k: usize,
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<Vertex, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceSummary>,
}

impl ColoringDocument {
    pub fn from_graph(g: &ColoredGraph) -> Self {
        ColoringDocument {
            schema_version: SCHEMA_VERSION,
            n: g.n(),
            k: g.k(),
            edges: g.edges().map(|(u, v, c)| [u, v, c]).collect(),
            labels: None,
            trace: None,
        }
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_trace(mut self, trace: TraceSummary) -> Self {
        self.trace = Some(trace);
        self
    }

    /// Rebuilds the graph; canonicalizes edge order and orientation.
    pub fn to_graph(&self) -> Result<ColoredGraph, GraphError> {
        ColoredGraph::new(
            self.n,
            self.k,
            self.edges.iter().map(|e| (e[0], e[1], e[2])),
        )
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: ColoringDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(doc.schema_version));
        }
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self, DocumentError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"schema_version\": {},", self.schema_version);
        let _ = writeln!(out, "  \"n\": {},", self.n);
        let _ = writeln!(out, "  \"k\": {},", self.k);
        out.push_str("  \"edges\": [");
        for (i, [u, v, c]) in self.edges.iter().enumerate() {
            let sep = if i + 1 == self.edges.len() { "" } else { "," };
            let _ = write!(out, "\n    [{u}, {v}, {c}]{sep}");
        }
        if !self.edges.is_empty() {
            out.push_str("\n  ");
        }
        out.push(']');
        if let Some(labels) = &self.labels {
            out.push_str(",\n  \"labels\": {");
            for (i, (id, name)) in labels.iter().enumerate() {
                let sep = if i + 1 == labels.len() { "" } else { "," };
                let name = serde_json::to_string(name).expect("strings serialize");
                let _ = write!(out, "\n    \"{id}\": {name}{sep}");
            }
            if !labels.is_empty() {
                out.push_str("\n  ");
            }
            out.push('}');
        }
        if let Some(trace) = &self.trace {
            let trace = serde_json::to_string(trace).expect("trace serializes");
            let _ = write!(out, ",\n  \"trace\": {trace}");
        }
        out.push_str("\n}\n");
        out
    }

    pub fn save(&self, path: &Path) -> Result<(), DocumentError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Header `vertex,a_1,...,a_k`, then one multiset-color row per vertex.
pub fn to_csv(g: &ColoredGraph) -> String {
    let mut out = String::from("vertex");
    for c in 1..=g.k() {
        let _ = write!(out, ",a_{c}");
    }
    out.push('\n');
    for (i, t) in g.multiset_colors().iter().enumerate() {
        let _ = write!(out, "{}", i + 1);
        for a in t.counts() {
            let _ = write!(out, ",{a}");
        }
        out.push('\n');
    }
    out
}

/// Undirected DOT graph; edges carry `color=<int>` and vertices a label.
pub fn to_dot(g: &ColoredGraph, labels: Option<&BTreeMap<Vertex, String>>) -> String {
    let mut out = String::from("graph kaleidoscope {\n");
    for v in g.vertices() {
        let label = labels
            .and_then(|l| l.get(&v))
            .cloned()
            .unwrap_or_else(|| v.to_string());
        let label = label.replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for (u, v, c) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v} [color={c}];");
    }
    out.push_str("}\n");
    out
}
