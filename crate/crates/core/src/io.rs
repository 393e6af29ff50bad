//! JSON map documents and Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derived::{DerivedMap, Origin};
use crate::map::{CombinatorialMap, MapError};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid map: {0}")]
    Validation(String),
}

impl From<MapError> for IoError {
    fn from(e: MapError) -> Self {
        IoError::Validation(e.to_string())
    }
}

/// On-disk form of a map. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub format_version: String,
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BTreeMap<String, String>>,
}

impl MapDocument {
    pub fn from_map(m: &CombinatorialMap) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            darts: m.dart_count(),
            alpha: m.alpha_perm().to_vec(),
            sigma: m.sigma_perm().to_vec(),
            vertex_labels: None,
            metadata: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_map(&self, allow_nonspherical: bool) -> Result<CombinatorialMap, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::Validation(format!(
                "unsupported format_version {:?}",
                self.format_version
            )));
        }
        if self.darts % 2 == 1 {
            return Err(IoError::Validation(format!("dart count {} is odd", self.darts)));
        }
        if self.alpha.len() != self.darts || self.sigma.len() != self.darts {
            return Err(IoError::Validation(format!(
                "expected {} entries in alpha and sigma, found {} and {}",
                self.darts,
                self.alpha.len(),
                self.sigma.len()
            )));
        }
        let m = CombinatorialMap::build(self.alpha.clone(), self.sigma.clone(), allow_nonspherical)?;
        if let Some(labels) = &self.vertex_labels {
            if labels.len() != m.vertex_count() {
                return Err(IoError::Validation(format!(
                    "{} vertex labels for {} vertices",
                    labels.len(),
                    m.vertex_count()
                )));
            }
        }
        Ok(m)
    }
}

pub fn parse_map(text: &str) -> Result<CombinatorialMap, IoError> {
    MapDocument::parse(text)?.to_map(false)
}

pub fn serialize_map(m: &CombinatorialMap) -> String {
    MapDocument::from_map(m).to_json()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT rendering of a map's graph (parallel edges and loops kept).
pub fn to_dot(m: &CombinatorialMap, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", dot_escape(name));
    for v in 0..m.vertex_count() {
        let _ = writeln!(out, "  v{v} [label=\"{v}\"];");
    }
    write_edges(&mut out, m);
    out.push_str("}\n");
    out
}

/// DOT rendering of a derived map, styled by origin: source vertices black,
/// source faces white, points on edges as squares.
pub fn derived_to_dot(d: &DerivedMap, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", dot_escape(name));
    for (v, origin) in d.vertex_origin.iter().enumerate() {
        let style = match origin {
            Origin::Vertex(i) => format!("label=\"{i}\", shape=circle, style=filled, fillcolor=black, fontcolor=white"),
            Origin::Face(i) => format!("label=\"{i}*\", shape=circle, style=filled, fillcolor=white"),
            Origin::Edge(i) => format!("label=\"e{i}\", shape=square"),
            other => format!("label=\"{other:?}\""),
        };
        let _ = writeln!(out, "  v{v} [{style}];");
    }
    write_edges(&mut out, &d.map);
    out.push_str("}\n");
    out
}

fn write_edges(out: &mut String, m: &CombinatorialMap) {
    for e in 0..m.edge_count() {
        let (a, b) = m.endpoints(e);
        let _ = writeln!(out, "  v{a} -- v{b} [id=\"e{e}\"];");
    }
}
