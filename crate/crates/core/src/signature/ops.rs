//! Face operations: contractions into higher strata and smoothings back out.
//!
//! Every operation builds the new graph combinatorially and then hands it to
//! the validator; a graph with violations is reported as `InvalidFace`.

use std::collections::{HashMap, HashSet};

use super::faces::{regions, Side};
use super::graph::{Edge, EdgeEnd, End, Endpoint, SignatureGraph, Vertex, VertexKind};
use super::validate::validate;
use super::SignatureError;

fn checked(g: SignatureGraph) -> Result<SignatureGraph, SignatureError> {
    let violations = validate(&g);
    if violations.is_empty() {
        Ok(g)
    } else {
        Err(SignatureError::InvalidFace(violations))
    }
}

fn edge_of(g: &SignatureGraph, id: usize) -> Result<Edge, SignatureError> {
    g.edge(id).copied().ok_or(SignatureError::UnknownEdge(id))
}

/// Connected component label of every endpoint (rays are separate nodes).
fn components(g: &SignatureGraph) -> HashMap<Endpoint, usize> {
    let mut adj: HashMap<Endpoint, Vec<Endpoint>> = HashMap::new();
    for e in &g.edges {
        adj.entry(e.tail).or_default().push(e.head);
        adj.entry(e.head).or_default().push(e.tail);
    }
    let mut comp = HashMap::new();
    let mut nodes: Vec<Endpoint> = adj.keys().copied().collect();
    nodes.sort();
    for start in nodes {
        if comp.contains_key(&start) {
            continue;
        }
        let c = comp.len();
        let mut stack = vec![start];
        comp.insert(start, c);
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if let std::collections::hash_map::Entry::Vacant(slot) = comp.entry(y) {
                    slot.insert(c);
                    stack.push(y);
                }
            }
        }
    }
    comp
}

/// Splits edge `id` at a new point; returns the ends at that point as
/// `(incoming half, outgoing half)`. The tail half keeps the id.
fn subdivide(g: &mut SignatureGraph, id: usize, at: usize) -> (EdgeEnd, EdgeEnd) {
    let new_id = g.next_edge_id();
    let e = g.edge_mut(id).expect("edge exists");
    let head = e.head;
    e.head = Endpoint::Vertex(at);
    let colour = e.colour;
    g.edges.push(Edge { id: new_id, colour, tail: Endpoint::Vertex(at), head });
    g.replace_end(head, EdgeEnd::new(id, End::Head), EdgeEnd::new(new_id, End::Head));
    (EdgeEnd::new(id, End::Head), EdgeEnd::new(new_id, End::Tail))
}

/// Joins `edge_a` and `edge_b` across region `region_id` and contracts the
/// diagonal to a new `Saddle(colour, 2)`.
pub fn contract_diagonal(
    g: &SignatureGraph,
    region_id: usize,
    edge_a: usize,
    edge_b: usize,
) -> Result<SignatureGraph, SignatureError> {
    if edge_a == edge_b {
        return Err(SignatureError::Precondition("a diagonal needs two distinct edges".into()));
    }
    let (a, b) = (edge_of(g, edge_a)?, edge_of(g, edge_b)?);
    if a.colour != b.colour {
        return Err(SignatureError::Precondition(format!("edges {edge_a} and {edge_b} differ in colour")));
    }
    let region = regions(g)?
        .into_iter()
        .find(|r| r.id == region_id)
        .ok_or(SignatureError::UnknownRegion(region_id))?;
    let side = |e: usize| {
        region.touches(e).ok_or_else(|| SignatureError::Precondition(format!("edge {e} does not bound region {region_id}")))
    };
    let (side_a, side_b) = (side(edge_a)?, side(edge_b)?);
    let comp = components(g);
    if comp[&a.tail] == comp[&b.tail] {
        return Err(SignatureError::NotAForest { edge_a, edge_b });
    }

    let mut h = g.clone();
    let s = h.next_vertex_id();
    // around the new point: forward, left, backward, right (counterclockwise)
    let seq = |h: &mut SignatureGraph, id: usize, side: Side| {
        let (inc, out) = subdivide(h, id, s);
        match side {
            Side::Left => [inc, out],
            Side::Right => [out, inc],
        }
    };
    let sa = seq(&mut h, edge_a, side_a);
    let sb = seq(&mut h, edge_b, side_b);
    h.vertices.push(Vertex { id: s, kind: VertexKind::Saddle { colour: a.colour, k: 2 } });
    h.rotation.insert(s, vec![sa[0], sa[1], sb[0], sb[1]]);
    checked(h)
}

/// Merges the endpoints of `edge` (both inner vertices) into its tail vertex,
/// leaving the kind of the merged vertex untouched.
fn merge_along(g: &mut SignatureGraph, edge: usize) -> Result<usize, SignatureError> {
    let e = edge_of(g, edge)?;
    let (Endpoint::Vertex(u), Endpoint::Vertex(v)) = (e.tail, e.head) else {
        return Err(SignatureError::Precondition(format!("edge {edge} ends at a ray")));
    };
    if u == v {
        return Err(SignatureError::Precondition(format!("edge {edge} is a loop")));
    }
    let after = |rot: &[EdgeEnd], x: EdgeEnd| -> Vec<EdgeEnd> {
        let i = rot.iter().position(|&y| y == x).expect("edge end in rotation");
        rot[i + 1..].iter().chain(&rot[..i]).copied().collect()
    };
    let mut merged = after(g.rotation_of(u), EdgeEnd::new(edge, End::Tail));
    merged.extend(after(g.rotation_of(v), EdgeEnd::new(edge, End::Head)));
    g.remove_edge(edge);
    for x in &mut g.edges {
        for p in [&mut x.tail, &mut x.head] {
            if *p == Endpoint::Vertex(v) {
                *p = Endpoint::Vertex(u);
            }
        }
    }
    g.remove_vertex(v);
    g.rotation.insert(u, merged);
    Ok(u)
}

/// Contracts an edge between two saddles of its own colour.
pub fn contract_edge(g: &SignatureGraph, edge: usize) -> Result<SignatureGraph, SignatureError> {
    let e = edge_of(g, edge)?;
    let saddle_k = |p: Endpoint| match p {
        Endpoint::Vertex(v) => match g.vertex(v).map(|x| x.kind) {
            Some(VertexKind::Saddle { colour, k }) if colour == e.colour => Some(k),
            _ => None,
        },
        Endpoint::Ray(_) => None,
    };
    let (Some(ku), Some(kv)) = (saddle_k(e.tail), saddle_k(e.head)) else {
        return Err(SignatureError::Precondition(format!("edge {edge} does not join two {} saddles", e.colour)));
    };
    let mut h = g.clone();
    let u = merge_along(&mut h, edge)?;
    h.vertex_mut(u).expect("merged vertex").kind = VertexKind::Saddle { colour: e.colour, k: ku + kv - 1 };
    checked(h)
}

/// Contracts the connected subtree spanned by `vertex_ids` to one vertex:
/// `Root(valence/4)` if a root is involved, a saddle otherwise.
pub fn contract_subtree(g: &SignatureGraph, vertex_ids: &[usize]) -> Result<SignatureGraph, SignatureError> {
    let set: HashSet<usize> = vertex_ids.iter().copied().collect();
    if set.is_empty() {
        return Err(SignatureError::Precondition("empty vertex set".into()));
    }
    let mut has_root = false;
    for &v in &set {
        match g.vertex(v).ok_or(SignatureError::UnknownVertex(v))?.kind {
            VertexKind::Root(_) => has_root = true,
            VertexKind::Saddle { .. } => {}
        }
    }
    let inside = |p: Endpoint| matches!(p, Endpoint::Vertex(v) if set.contains(&v));
    let internal: Vec<Edge> = g.edges.iter().filter(|e| inside(e.tail) && inside(e.head)).copied().collect();
    if internal.len() + 1 != set.len() {
        return Err(SignatureError::Precondition(format!(
            "{} vertices joined by {} edges do not form a subtree",
            set.len(),
            internal.len()
        )));
    }
    let mut h = g.clone();
    // merging rewrites endpoints, so re-read each internal edge before contracting it
    let mut survivor = *vertex_ids.iter().min().expect("non-empty");
    for e in &internal {
        survivor = merge_along(&mut h, e.id)?;
    }
    let valence = h.rotation_of(survivor).len();
    let kind = if has_root {
        if valence % 4 != 0 {
            return Err(SignatureError::Precondition(format!("merged root has valence {valence}")));
        }
        VertexKind::Root(valence / 4)
    } else {
        let colour = h.colour_of(h.rotation_of(survivor)[0]).expect("edge exists");
        VertexKind::Saddle { colour, k: valence / 2 }
    };
    h.vertex_mut(survivor).expect("merged vertex").kind = kind;
    checked(h)
}

/// The two resolutions of a 4-valent saddle into a pair of disjoint arcs.
pub fn smoothings(g: &SignatureGraph, vertex_id: usize) -> Result<Vec<SignatureGraph>, SignatureError> {
    let v = g.vertex(vertex_id).ok_or(SignatureError::UnknownVertex(vertex_id))?;
    if !matches!(v.kind, VertexKind::Saddle { k: 2, .. }) {
        return Err(SignatureError::Precondition(format!("vertex {vertex_id} is not a 4-valent saddle")));
    }
    let rot = g.rotation_of(vertex_id).to_vec();
    if rot.len() != 4 {
        return Err(SignatureError::Precondition(format!("saddle {vertex_id} has {} edge ends", rot.len())));
    }
    (0..2)
        .map(|j| {
            let mut h = g.clone();
            for pair in [[rot[j], rot[j + 1]], [rot[(j + 2) % 4], rot[(j + 3) % 4]]] {
                let (inc, out) = if pair[0].is_out() { (pair[1], pair[0]) } else { (pair[0], pair[1]) };
                if inc.is_out() || !out.is_out() {
                    return Err(SignatureError::Precondition(format!("saddle {vertex_id} does not alternate")));
                }
                join(&mut h, inc.edge, out.edge);
            }
            h.remove_vertex(vertex_id);
            checked(h)
        })
        .collect()
}

/// Replaces `inc` (ending at a vertex) and `out` (leaving it) by one edge.
fn join(g: &mut SignatureGraph, inc: usize, out: usize) {
    let head = g.edge(out).expect("edge exists").head;
    g.remove_edge(out);
    g.edge_mut(inc).expect("edge exists").head = head;
    g.replace_end(head, EdgeEnd::new(out, End::Head), EdgeEnd::new(inc, End::Head));
}
