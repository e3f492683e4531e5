use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::faces::face_map;
use super::graph::{EdgeEnd, End, Endpoint, SignatureGraph, VertexKind};
use crate::rays::{Colour, Quadrant, RayIndex};

/// Which combinatorial property a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    /// Ids, endpoints and rotations do not describe a graph.
    Structure,
    /// 1: the graph is a forest.
    Forest,
    /// 2: every region can be coloured, differently on both sides of each edge.
    RegionColouring,
    /// 3: edge colour and orientation agree with the colours on its sides.
    EdgeColouring,
    /// 4: each ray ends exactly one edge, with colour and orientation from `k mod 4`.
    Rays,
    /// 5: the sectors at infinity of one region share their colour.
    Infinity,
    /// 6: vertex arity and incident colours.
    VertexTypes,
    /// 7: orientations around a vertex follow the germ of `Re z^k = 0`.
    LocalGerm,
    /// The rotation system with the rays in circular order is not planar.
    Embedding,
    /// At most `2d-1` inner and `6d-1` total vertices.
    VertexBounds,
}

impl Property {
    /// The number of the property in the list of seven, if it is one of them.
    pub fn number(self) -> Option<u8> {
        match self {
            Property::Forest => Some(1),
            Property::RegionColouring => Some(2),
            Property::EdgeColouring => Some(3),
            Property::Rays => Some(4),
            Property::Infinity => Some(5),
            Property::VertexTypes => Some(6),
            Property::LocalGerm => Some(7),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: Property,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.property.number() {
            Some(n) => write!(f, "property {n} ({:?}): {}", self.property, self.detail),
            None => write!(f, "{:?}: {}", self.property, self.detail),
        }
    }
}

struct Report(Vec<Violation>);

impl Report {
    fn push(&mut self, property: Property, detail: impl Into<String>) {
        self.0.push(Violation { property, detail: detail.into() });
    }
}

/// All property violations of `g`; empty means `g` is a valid signature graph.
pub fn validate(g: &SignatureGraph) -> Vec<Violation> {
    let mut r = Report(Vec::new());
    if !structure(g, &mut r) {
        return r.0;
    }
    forest(g, &mut r);
    let rays_ok = rays(g, &mut r);
    vertices(g, &mut r);
    if rays_ok {
        colouring(g, &mut r);
    }
    bounds(g, &mut r);
    r.0
}

fn structure(g: &SignatureGraph, r: &mut Report) -> bool {
    let before = r.0.len();
    let n = g.ray_count();
    if g.degree == 0 {
        r.push(Property::Structure, "degree must be positive");
    }
    let mut ids = HashSet::new();
    for v in &g.vertices {
        if !ids.insert(v.id) {
            r.push(Property::Structure, format!("duplicate vertex id {}", v.id));
        }
        if !g.rotation.contains_key(&v.id) {
            r.push(Property::Structure, format!("vertex {} has no rotation", v.id));
        }
    }
    for key in g.rotation.keys() {
        if !ids.contains(key) {
            r.push(Property::Structure, format!("rotation for unknown vertex {key}"));
        }
    }
    let mut edge_ids = HashSet::new();
    let mut incident: HashMap<usize, Vec<EdgeEnd>> = HashMap::new();
    for e in &g.edges {
        if !edge_ids.insert(e.id) {
            r.push(Property::Structure, format!("duplicate edge id {}", e.id));
        }
        for end in [End::Tail, End::Head] {
            match e.endpoint(end) {
                Endpoint::Vertex(v) if !ids.contains(&v) => {
                    r.push(Property::Structure, format!("edge {} ends at unknown vertex {v}", e.id))
                }
                Endpoint::Vertex(v) => incident.entry(v).or_default().push(EdgeEnd::new(e.id, end)),
                Endpoint::Ray(k) if k >= n => r.push(Property::Structure, format!("edge {} ends at ray {k} >= {n}", e.id)),
                Endpoint::Ray(_) => {}
            }
        }
    }
    for v in &g.vertices {
        let mut listed = g.rotation_of(v.id).to_vec();
        let mut actual = incident.remove(&v.id).unwrap_or_default();
        listed.sort();
        actual.sort();
        if listed != actual {
            r.push(Property::Structure, format!("rotation of vertex {} does not list its incident edge ends", v.id));
        }
    }
    r.0.len() == before
}

fn forest(g: &SignatureGraph, r: &mut Report) {
    let index: HashMap<usize, usize> = g.vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
    let node = |p: Endpoint| match p {
        Endpoint::Vertex(v) => index[&v],
        Endpoint::Ray(k) => g.vertices.len() + k,
    };
    let mut parent: Vec<usize> = (0..g.vertices.len() + g.ray_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in &g.edges {
        let (a, b) = (find(&mut parent, node(e.tail)), find(&mut parent, node(e.head)));
        if a == b {
            r.push(Property::Forest, format!("edge {} closes a cycle", e.id));
        } else {
            parent[a] = b;
        }
    }
}

fn rays(g: &SignatureGraph, r: &mut Report) -> bool {
    let before = r.0.len();
    let mut count = vec![0usize; g.ray_count()];
    for e in &g.edges {
        if let (Endpoint::Ray(a), Endpoint::Ray(b)) = (e.tail, e.head) {
            r.push(Property::Rays, format!("edge {} joins ray {a} directly to ray {b}", e.id));
        }
        for end in [End::Tail, End::Head] {
            if let Endpoint::Ray(k) = e.endpoint(end) {
                count[k] += 1;
                let ray = RayIndex(k);
                if ray.colour() != e.colour {
                    r.push(Property::Rays, format!("ray {k} carries a {} edge", e.colour));
                }
                // outgoing rays are heads, ingoing rays tails
                if ray.is_outgoing() != (end == End::Head) {
                    r.push(Property::Rays, format!("edge {} has the wrong orientation at ray {k}", e.id));
                }
            }
        }
    }
    for (k, &c) in count.iter().enumerate() {
        if c != 1 {
            r.push(Property::Rays, format!("ray {k} ends {c} edges"));
        }
    }
    r.0.len() == before
}

/// Position of an edge end in the cycle R-out, I-out, R-in, I-in.
fn germ_code(colour: Colour, ee: EdgeEnd) -> usize {
    match (colour, ee.is_out()) {
        (Colour::R, true) => 0,
        (Colour::I, true) => 1,
        (Colour::R, false) => 2,
        (Colour::I, false) => 3,
    }
}

fn vertices(g: &SignatureGraph, r: &mut Report) {
    let colour = |ee: EdgeEnd| g.colour_of(ee).expect("structure checked");
    let mut root_total = 0;
    for v in &g.vertices {
        let rot = g.rotation_of(v.id);
        let len = rot.len();
        if len < 2 {
            r.push(Property::VertexTypes, format!("vertex {} is terminal", v.id));
            continue;
        }
        match v.kind {
            VertexKind::Root(m) => {
                root_total += m;
                if m == 0 || len != 4 * m {
                    r.push(Property::VertexTypes, format!("root {} of multiplicity {m} has {len} edge ends", v.id));
                }
                if (0..len).any(|i| colour(rot[i]) == colour(rot[(i + 1) % len])) {
                    r.push(Property::VertexTypes, format!("colours around root {} do not alternate", v.id));
                } else if (0..len).any(|i| {
                    let a = germ_code(colour(rot[i]), rot[i]);
                    let b = germ_code(colour(rot[(i + 1) % len]), rot[(i + 1) % len]);
                    b != (a + 1) % 4
                }) {
                    r.push(Property::LocalGerm, format!("ends around root {} are not R-out, I-out, R-in, I-in", v.id));
                }
            }
            VertexKind::Saddle { colour: c, k } => {
                if k < 2 || len != 2 * k {
                    r.push(Property::VertexTypes, format!("saddle {} with k = {k} has {len} edge ends", v.id));
                }
                if rot.iter().any(|&ee| colour(ee) != c) {
                    r.push(Property::VertexTypes, format!("saddle {} has an edge not of colour {c}", v.id));
                }
                if len % 2 == 1 || (0..len).any(|i| rot[i].is_out() == rot[(i + 1) % len].is_out()) {
                    r.push(Property::LocalGerm, format!("orientations around saddle {} do not alternate", v.id));
                }
            }
        }
    }
    if root_total != g.degree {
        r.push(Property::VertexTypes, format!("root multiplicities sum to {root_total}, not {}", g.degree));
    }
}

/// Allowed (left, right) colours of an edge.
fn sides_allowed(colour: Colour, left: Quadrant, right: Quadrant) -> bool {
    use Quadrant::*;
    matches!(
        (colour, left, right),
        (Colour::R, A, D) | (Colour::R, B, C) | (Colour::I, B, A) | (Colour::I, C, D)
    )
}

fn colouring(g: &SignatureGraph, r: &mut Report) {
    let map = match face_map(g) {
        Ok(m) => m,
        Err(msg) => {
            r.push(Property::Structure, msg);
            return;
        }
    };
    if map.euler != 2 {
        r.push(Property::Embedding, format!("V - E + F = {} with the rays in circular order", map.euler));
    }
    let colours: HashMap<usize, Option<Quadrant>> = map.regions.iter().map(|reg| (reg.id, reg.colour)).collect();
    for reg in &map.regions {
        if reg.sectors.is_empty() {
            r.push(Property::RegionColouring, format!("region {} is bounded", reg.id));
        } else if reg.colour.is_none() {
            r.push(Property::Infinity, format!("region {} contains sectors {:?} of different colours", reg.id, reg.sectors));
        }
    }
    for e in &g.edges {
        let (left, right) = map.sides[&e.id];
        if left == right {
            r.push(Property::RegionColouring, format!("edge {} has region {left} on both sides", e.id));
            continue;
        }
        if let (Some(Some(lc)), Some(Some(rc))) = (colours.get(&left), colours.get(&right)) {
            if !sides_allowed(e.colour, *lc, *rc) {
                r.push(
                    Property::EdgeColouring,
                    format!("{} edge {} has {} on its left and {} on its right", e.colour, e.id, lc.letter(), rc.letter()),
                );
            }
        }
    }
}

fn bounds(g: &SignatureGraph, r: &mut Report) {
    let d = g.degree;
    let inner = g.vertices.len();
    if inner + 1 > 2 * d {
        r.push(Property::VertexBounds, format!("{inner} inner vertices exceed 2d-1 = {}", 2 * d - 1));
    }
    if inner + 4 * d + 1 > 6 * d {
        r.push(Property::VertexBounds, format!("{} vertices exceed 6d-1 = {}", inner + 4 * d, 6 * d - 1));
    }
}
