//! Canonical form of a signature graph with its rays held fixed.
//!
//! Inner vertices are numbered breadth-first, entering the graph from rays
//! `0, 1, 2, …` in turn; each vertex's rotation is read counterclockwise from
//! the end through which it was first reached. Since the start of every
//! rotation is fixed by the traversal, the string determines the rotation
//! system up to relabelling.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::graph::{Edge, EdgeEnd, Endpoint, SignatureGraph, Vertex, VertexKind};

/// Vertex ids in visiting order, each with the end it was first reached through.
fn traverse(g: &SignatureGraph) -> Vec<(usize, EdgeEnd)> {
    let mut starts: Vec<(usize, EdgeEnd)> = (0..g.ray_count())
        .filter_map(|k| {
            let ee = g.ray_edge(k)?;
            match g.far_endpoint(ee)? {
                Endpoint::Vertex(v) => Some((v, ee.opposite())),
                Endpoint::Ray(_) => None,
            }
        })
        .collect();
    // components without rays only occur in invalid graphs
    starts.extend(g.vertices.iter().filter_map(|v| g.rotation_of(v.id).first().map(|&ee| (v.id, ee))));
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    for (v, via) in starts {
        if !seen.insert(v) {
            continue;
        }
        let mut i = order.len();
        order.push((v, via));
        while i < order.len() {
            let (u, entry) = order[i];
            for ee in rotated(g.rotation_of(u), entry) {
                if let Some(Endpoint::Vertex(w)) = g.far_endpoint(ee) {
                    if seen.insert(w) {
                        order.push((w, ee.opposite()));
                    }
                }
            }
            i += 1;
        }
    }
    order
}

/// `rot` read cyclically starting at `start`.
fn rotated(rot: &[EdgeEnd], start: EdgeEnd) -> Vec<EdgeEnd> {
    let i = rot.iter().position(|&x| x == start).unwrap_or(0);
    rot[i..].iter().chain(&rot[..i]).copied().collect()
}

fn kind_token(kind: VertexKind) -> String {
    match kind {
        VertexKind::Root(m) => format!("r{m}"),
        VertexKind::Saddle { colour, k } => format!("s{colour}{k}"),
    }
}

/// Deterministic string equal for two graphs exactly when they are
/// isomorphic as rotation systems with the same labelled rays.
pub fn canonical_encoding(g: &SignatureGraph) -> String {
    let order = traverse(g);
    let index: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &(v, _))| (v, i)).collect();
    let mut parts = Vec::with_capacity(order.len());
    for &(v, via) in &order {
        let kind = g.vertex(v).map(|x| x.kind).unwrap_or(VertexKind::Root(0));
        let items: Vec<String> = rotated(g.rotation_of(v), via)
            .into_iter()
            .map(|ee| {
                let colour = g.colour_of(ee).map(|c| c.letter()).unwrap_or('?');
                let dir = if ee.is_out() { '>' } else { '<' };
                let target = match g.far_endpoint(ee) {
                    Some(Endpoint::Ray(k)) => format!("k{k}"),
                    Some(Endpoint::Vertex(u)) => format!("v{}", index.get(&u).copied().unwrap_or(usize::MAX)),
                    None => "?".into(),
                };
                format!("{colour}{dir}{target}")
            })
            .collect();
        parts.push(format!("{}({})", kind_token(kind), items.join(",")));
    }
    parts.join(";")
}

/// The same graph with vertices renumbered in canonical order and edges in
/// order of first appearance.
pub fn canonical_form(g: &SignatureGraph) -> SignatureGraph {
    let order = traverse(g);
    let vmap: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &(v, _))| (v, i)).collect();
    let mut emap: HashMap<usize, usize> = HashMap::new();
    let mut rotation = BTreeMap::new();
    for (i, &(v, via)) in order.iter().enumerate() {
        let rot: Vec<EdgeEnd> = rotated(g.rotation_of(v), via)
            .into_iter()
            .map(|ee| {
                let next = emap.len();
                EdgeEnd::new(*emap.entry(ee.edge).or_insert(next), ee.end)
            })
            .collect();
        rotation.insert(i, rot);
    }
    let relabel = |p: Endpoint| match p {
        Endpoint::Vertex(v) => Endpoint::Vertex(vmap[&v]),
        ray => ray,
    };
    let mut edges: Vec<Edge> = g
        .edges
        .iter()
        .map(|e| {
            let next = emap.len();
            let id = *emap.entry(e.id).or_insert(next);
            Edge { id, colour: e.colour, tail: relabel(e.tail), head: relabel(e.head) }
        })
        .collect();
    edges.sort_by_key(|e| e.id);
    let mut vertices: Vec<Vertex> =
        g.vertices.iter().map(|v| Vertex { id: vmap[&v.id], kind: v.kind }).collect();
    vertices.sort_by_key(|v| v.id);
    SignatureGraph { degree: g.degree, vertices, edges, rotation }
}
