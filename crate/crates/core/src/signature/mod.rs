//! Combinatorial signatures: planar maps with `4d` labelled rays, the
//! validator, the quaternary-tree model of bi-regular signatures, canonical
//! forms, root labels and face operations.

mod canonical;
mod faces;
pub mod fixtures;
mod graph;
mod labels;
mod ops;
mod tree;
mod validate;

use thiserror::Error;

pub use canonical::{canonical_encoding, canonical_form};
pub use faces::{regions, EdgeSide, Region, Side};
pub use graph::{Edge, EdgeEnd, End, Endpoint, SignatureGraph, Vertex, VertexKind};
pub use labels::{label_roots, RootLabel};
pub use ops::{contract_diagonal, contract_edge, contract_subtree, smoothings};
pub use tree::{biregular_to_graph, graph_to_biregular, picture_to_signature, tree_from_crosses, BiRegularSignature, Tree};
pub use validate::{validate, Property, Violation};

use crate::tracing::TraceError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SignatureError {
    #[error("malformed signature graph: {0}")]
    Malformed(String),
    #[error("face operation produced an invalid graph: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFace(Vec<Violation>),
    #[error("edges {edge_a} and {edge_b} lie in one component; the diagonal would close a cycle")]
    NotAForest { edge_a: usize, edge_b: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("unknown region {0}")]
    UnknownRegion(usize),
    #[error("signature text parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("picture does not decompose into regions: {0}")]
    InconsistentPicture(String),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// `Σ (2k - 3)` over saddles plus `Σ 2(m - 1)` over roots.
pub fn codimension_of(g: &SignatureGraph) -> usize {
    g.vertices
        .iter()
        .map(|v| match v.kind {
            VertexKind::Root(m) => 2 * m.saturating_sub(1),
            VertexKind::Saddle { k, .. } => (2 * k).saturating_sub(3),
        })
        .sum()
}
