use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rays::Colour;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Root of multiplicity `m`: `4m` edge ends of alternating colour.
    Root(usize),
    /// `2k` edge ends of one colour meeting like `Re z^k = 0`.
    Saddle { colour: Colour, k: usize },
}

impl VertexKind {
    pub fn valence(self) -> usize {
        match self {
            VertexKind::Root(m) => 4 * m,
            VertexKind::Saddle { k, .. } => 2 * k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub kind: VertexKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Vertex(usize),
    Ray(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub colour: Colour,
    pub tail: Endpoint,
    pub head: Endpoint,
}

impl Edge {
    pub fn endpoint(&self, end: End) -> Endpoint {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }

    pub fn endpoint_mut(&mut self, end: End) -> &mut Endpoint {
        match end {
            End::Tail => &mut self.tail,
            End::Head => &mut self.head,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One end of an edge as seen from the vertex it is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: End,
}

impl EdgeEnd {
    pub fn new(edge: usize, end: End) -> Self {
        EdgeEnd { edge, end }
    }

    /// The edge leaves the vertex at this end.
    pub fn is_out(self) -> bool {
        self.end == End::Tail
    }

    pub fn opposite(self) -> EdgeEnd {
        EdgeEnd { edge: self.edge, end: self.end.opposite() }
    }
}

/// A planar map with `4d` fixed ideal vertices (the rays) and inner vertices
/// carrying a counterclockwise rotation of their edge ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureGraph {
    pub degree: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub rotation: BTreeMap<usize, Vec<EdgeEnd>>,
}

impl SignatureGraph {
    pub fn ray_count(&self) -> usize {
        4 * self.degree
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn vertex_mut(&mut self, id: usize) -> Option<&mut Vertex> {
        self.vertices.iter_mut().find(|v| v.id == id)
    }

    pub fn edge(&self, id: usize) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn edge_mut(&mut self, id: usize) -> Option<&mut Edge> {
        self.edges.iter_mut().find(|e| e.id == id)
    }

    pub fn rotation_of(&self, vertex: usize) -> &[EdgeEnd] {
        self.rotation.get(&vertex).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn next_vertex_id(&self) -> usize {
        self.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0)
    }

    pub fn next_edge_id(&self) -> usize {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    pub fn colour_of(&self, ee: EdgeEnd) -> Option<Colour> {
        self.edge(ee.edge).map(|e| e.colour)
    }

    /// The endpoint at the far side of `ee`.
    pub fn far_endpoint(&self, ee: EdgeEnd) -> Option<Endpoint> {
        self.edge(ee.edge).map(|e| e.endpoint(ee.end.opposite()))
    }

    /// The edge attached to ray `k`, with the end that touches the ray.
    pub fn ray_edge(&self, k: usize) -> Option<EdgeEnd> {
        self.edges.iter().find_map(|e| {
            if e.head == Endpoint::Ray(k) {
                Some(EdgeEnd::new(e.id, End::Head))
            } else if e.tail == Endpoint::Ray(k) {
                Some(EdgeEnd::new(e.id, End::Tail))
            } else {
                None
            }
        })
    }

    /// Replaces `old` by `new` wherever it occurs in the rotation of `at`.
    pub(crate) fn replace_end(&mut self, at: Endpoint, old: EdgeEnd, new: EdgeEnd) {
        if let Endpoint::Vertex(v) = at {
            if let Some(rot) = self.rotation.get_mut(&v) {
                for x in rot.iter_mut().filter(|x| **x == old) {
                    *x = new;
                }
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, id: usize) {
        self.edges.retain(|e| e.id != id);
    }

    pub(crate) fn remove_vertex(&mut self, id: usize) {
        self.vertices.retain(|v| v.id != id);
        self.rotation.remove(&id);
    }

    pub fn codimension(&self) -> usize {
        super::codimension_of(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
