//! Edge-list and labeling documents, and DOT output.
//!
//! An edge list is a header `n <count>` followed by one `u v` line per edge
//! with 0-based vertex indices. Blank lines and lines starting with `#` are
//! ignored. A labeling document is JSON with a fixed key order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{baca_bound, degree_count_bound};
use crate::constructors::ConstructionCertificate;
use crate::families::{CanonicalOrder, FamilySpec, Role};
use crate::graph::{Graph, GraphError};
use crate::labeling::{verify, weight_profile, Label, TotalLabeling};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Edge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing header line `n <count>`")]
    MissingHeader,
    #[error("document describes {document} vertices but the graph has {graph}")]
    VertexCountMismatch { document: usize, graph: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid labeling document: {0}")]
    Json(#[from] serde_json::Error),
}

/// Reads an edge list, keeping edges in file order.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(IoError::MissingHeader)?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count.parse::<usize>().map_err(|_| IoError::Parse {
            line: header_line,
            message: format!("bad vertex count `{count}`"),
        })?,
        _ => {
            return Err(IoError::Parse {
                line: header_line,
                message: format!("expected `n <count>`, found `{header}`"),
            })
        }
    };

    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, content) in lines {
        let endpoint = |token: &str| {
            token.parse::<usize>().map_err(|_| IoError::Parse {
                line,
                message: format!("bad vertex index `{token}`"),
            })
        };
        match content.split_whitespace().collect::<Vec<_>>()[..] {
            [u, v] => edges.push((endpoint(u)?, endpoint(v)?)),
            _ => {
                return Err(IoError::Parse {
                    line,
                    message: format!("expected `u v`, found `{content}`"),
                })
            }
        }
        edge_lines.push(line);
    }

    Graph::new(n, edges).map_err(|source| {
        let index = match source {
            GraphError::SelfLoop { index, .. }
            | GraphError::DuplicateEdge { index, .. }
            | GraphError::VertexOutOfRange { index, .. } => Some(index),
            _ => None,
        };
        match index {
            Some(i) => IoError::Edge {
                line: edge_lines[i],
                source,
            },
            None => IoError::Graph(source),
        }
    })
}

/// The edge-list form of `g`.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsSection {
    pub baca: u64,
    pub degree_count: u64,
}

/// A labeling with its derived weights, irregularity and bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: usize,
    pub s: Label,
    pub edge_labels: Vec<Label>,
    pub vertex_labels: Vec<Label>,
    pub weights: Vec<Label>,
    pub is_irregular: bool,
    pub bounds: BoundsSection,
}

impl LabelingDocument {
    /// Builds a document, recomputing weights and bounds from `g`.
    pub fn from_labeling(
        g: &Graph,
        lab: &TotalLabeling,
        family: Option<&FamilySpec>,
    ) -> Result<Self, IoError> {
        let weights = weight_profile(g, lab)?.weights;
        let report = verify(g, lab)?;
        Ok(Self {
            family: family.map(ToString::to_string),
            n: g.vertex_count(),
            s: lab.s(),
            edge_labels: lab.edge_labels().to_vec(),
            vertex_labels: lab.vertex_labels().to_vec(),
            weights,
            is_irregular: report.is_irregular,
            bounds: BoundsSection {
                baca: baca_bound(g)?,
                degree_count: degree_count_bound(g)?.0,
            },
        })
    }

    pub fn from_certificate(cert: &ConstructionCertificate) -> Result<Self, IoError> {
        Self::from_labeling(&cert.graph, &cert.labeling, Some(&cert.family))
    }

    /// The labels as a [`TotalLabeling`] checked against `g`'s shape.
    pub fn to_labeling(&self, g: &Graph) -> Result<TotalLabeling, IoError> {
        if self.n != g.vertex_count() {
            return Err(IoError::VertexCountMismatch {
                document: self.n,
                graph: g.vertex_count(),
            });
        }
        let lab = TotalLabeling::new(self.vertex_labels.clone(), self.edge_labels.clone(), self.s)?;
        weight_profile(g, &lab)?;
        Ok(lab)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

pub fn emit_labeling(cert: &ConstructionCertificate) -> Result<String, IoError> {
    Ok(LabelingDocument::from_certificate(cert)?.to_text())
}

pub fn parse_labeling_document(text: &str) -> Result<LabelingDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

/// Graphviz text with `λ=x / wt=w` on each vertex and labels on edges. A
/// center vertex named by `roles` is drawn as a double circle.
pub fn emit_dot(
    g: &Graph,
    lab: &TotalLabeling,
    roles: Option<&CanonicalOrder>,
) -> Result<String, IoError> {
    let weights = weight_profile(g, lab)?.weights;
    let mut out = String::from("graph labeling {\n");
    for (v, (&label, &weight)) in lab.vertex_labels().iter().zip(&weights).enumerate() {
        let center = roles.is_some_and(|r| r.role(v) == Role::Center);
        let extra = if center {
            ", shape=doublecircle, xlabel=\"center\""
        } else {
            ""
        };
        let _ = writeln!(out, "  {v} [label=\"λ={label} / wt={weight}\"{extra}];");
    }
    for (&(u, v), &label) in g.edges().iter().zip(lab.edge_labels()) {
        let _ = writeln!(out, "  {u} -- {v} [label=\"{label}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}
