//! JSON diagram format.
//!
//! ```json
//! { "inputs": [4], "outputs": [5],
//!   "vertices": [ {"id": 0, "kind": "triangle", "legs": 2} ],
//!   "edges": [ [4, [0, 0]], [[0, 1], 5] ] }
//! ```
//!
//! An edge endpoint is a node id, or `[vertex, port]` for the legs of an
//! oriented vertex.  Vertices are written in id order and edges in stored
//! order, so serialising a parsed canonical file reproduces it exactly.  The
//! optional `"loops"` field counts free closed loops.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Diagram, DiagramError, Edge, End, Generator, NodeId};
use crate::kind::GeneratorKind;

/// A kind that can be written to and read from a JSON vertex record.
pub trait JsonKind: Generator {
    /// The `"kind"` string and optional `"phase"` bit.
    fn to_json(&self) -> (String, Option<u8>);
    /// Inverse of [`JsonKind::to_json`].
    fn from_json(kind: &str, phase: Option<u8>) -> Result<Self, String>;
}

impl JsonKind for GeneratorKind {
    fn to_json(&self) -> (String, Option<u8>) {
        (self.as_str().to_string(), None)
    }

    fn from_json(kind: &str, phase: Option<u8>) -> Result<Self, String> {
        if phase.is_some() {
            return Err(format!("ZH kind {kind:?} takes no phase"));
        }
        kind.parse()
    }
}

/// Errors when reading diagram files.
#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed diagram JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("vertex {id}: {message}")]
    Kind { id: NodeId, message: String },
    #[error("vertex {id} declares {declared} legs but has {actual}")]
    LegCount { id: NodeId, declared: usize, actual: usize },
    #[error(transparent)]
    Invalid(#[from] DiagramError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: NodeId,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<u8>,
    legs: usize,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(untagged)]
enum EndRecord {
    Node(NodeId),
    Port(NodeId, u8),
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramRecord {
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    vertices: Vec<VertexRecord>,
    edges: Vec<(EndRecord, EndRecord)>,
    #[serde(default, skip_serializing_if = "is_zero")]
    loops: u32,
}

impl<K: JsonKind> Diagram<K> {
    fn to_record(&self) -> DiagramRecord {
        let end = |e: End| match e {
            End::Point(p) => EndRecord::Node(p),
            End::Leg(v, port) => {
                if self.kind(v).is_some_and(|k| k.oriented()) {
                    EndRecord::Port(v, port)
                } else {
                    EndRecord::Node(v)
                }
            }
        };
        DiagramRecord {
            inputs: self.inputs().to_vec(),
            outputs: self.outputs().to_vec(),
            vertices: self
                .vertices()
                .map(|(id, k)| {
                    let (kind, phase) = k.to_json();
                    VertexRecord { id, kind, phase, legs: self.degree(id) }
                })
                .collect(),
            edges: self.edges().iter().map(|e| (end(e.0), end(e.1))).collect(),
            loops: self.loops(),
        }
    }

    /// Compact JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("diagram records serialise")
    }

    /// Indented JSON text.
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("diagram records serialise")
    }

    /// JSON value form, for embedding in reports.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_record()).expect("diagram records serialise")
    }

    /// Parses and validates a diagram.
    pub fn from_json(text: &str) -> Result<Self, JsonError> {
        let rec: DiagramRecord = serde_json::from_str(text)?;
        Self::from_record(rec)
    }

    /// Parses a diagram from a JSON value.
    pub fn from_json_value(value: serde_json::Value) -> Result<Self, JsonError> {
        let rec: DiagramRecord = serde_json::from_value(value)?;
        Self::from_record(rec)
    }

    fn from_record(rec: DiagramRecord) -> Result<Self, JsonError> {
        let mut vertices = Vec::with_capacity(rec.vertices.len());
        for v in &rec.vertices {
            let kind = K::from_json(&v.kind, v.phase).map_err(|message| JsonError::Kind { id: v.id, message })?;
            vertices.push((v.id, kind));
        }
        let ids: std::collections::HashSet<NodeId> = rec.vertices.iter().map(|v| v.id).collect();
        let end = |e: EndRecord| match e {
            EndRecord::Node(n) if ids.contains(&n) => End::Leg(n, 0),
            EndRecord::Node(n) => End::Point(n),
            EndRecord::Port(n, port) => End::Leg(n, port),
        };
        let edges: Vec<Edge> = rec.edges.iter().map(|&(a, b)| Edge(end(a), end(b))).collect();
        let d = Diagram::build_with_loops(vertices, edges, rec.inputs, rec.outputs, rec.loops)?;
        for v in &rec.vertices {
            let actual = d.degree(v.id);
            if actual != v.legs {
                return Err(JsonError::LegCount { id: v.id, declared: v.legs, actual });
            }
        }
        Ok(d)
    }
}
