//! Bi-regular signatures as quaternary trees.
//!
//! A node is a root of `P`; its cross (R-out, I-out, R-in, I-in) cuts its
//! region into four sub-regions A, B, C, D, counterclockwise from the R-out
//! arm. The distinguished root of a region is the one whose R-out arm ends at
//! the smallest ray `k ≡ 0 (mod 4)` of the region.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use super::graph::{Edge, EdgeEnd, End, Endpoint, SignatureGraph, Vertex, VertexKind};
use super::SignatureError;
use crate::rays::Colour;
use crate::tracing::GeometricPicture;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    #[default]
    Empty,
    Node(Box<[Tree; 4]>),
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree::node([Tree::Empty, Tree::Empty, Tree::Empty, Tree::Empty])
    }

    pub fn node(slots: [Tree; 4]) -> Tree {
        Tree::Node(Box::new(slots))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Tree::Empty => 0,
            Tree::Node(slots) => 1 + slots.iter().map(Tree::node_count).sum::<usize>(),
        }
    }

    pub fn slots(&self) -> Option<&[Tree; 4]> {
        match self {
            Tree::Empty => None,
            Tree::Node(slots) => Some(slots),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Empty => write!(f, "."),
            Tree::Node(slots) => {
                write!(f, "(")?;
                for s in slots.iter() {
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A bi-regular signature: a quaternary tree with `d` nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiRegularSignature(pub Tree);

impl BiRegularSignature {
    pub fn degree(&self) -> usize {
        self.0.node_count()
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }
}

impl fmt::Display for BiRegularSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BiRegularSignature {
    type Err = SignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let tree = parse_tree(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(SignatureError::Parse { position: pos, message: "trailing characters".into() });
        }
        Ok(BiRegularSignature(tree))
    }
}

fn parse_tree(s: &[u8], pos: &mut usize) -> Result<Tree, SignatureError> {
    match s.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(Tree::Empty)
        }
        Some(b'(') => {
            *pos += 1;
            let a = parse_tree(s, pos)?;
            let b = parse_tree(s, pos)?;
            let c = parse_tree(s, pos)?;
            let d = parse_tree(s, pos)?;
            if s.get(*pos) != Some(&b')') {
                return Err(SignatureError::Parse { position: *pos, message: "expected ')'".into() });
            }
            *pos += 1;
            Ok(Tree::node([a, b, c, d]))
        }
        Some(_) => Err(SignatureError::Parse { position: *pos, message: "expected '.' or '('".into() }),
        None => Err(SignatureError::Parse { position: *pos, message: "unexpected end of input".into() }),
    }
}

/// Index of the smallest ray `≡ 0 (mod 4)` in a region's ray list.
fn distinguished(rays: &[usize]) -> Option<usize> {
    rays.iter().enumerate().filter(|(_, &k)| k % 4 == 0).min_by_key(|(_, &k)| k).map(|(i, _)| i)
}

fn cyclic_slice(rays: &[usize], from: usize, len: usize) -> Vec<usize> {
    (0..len).map(|j| rays[(from + j) % rays.len()]).collect()
}

/// Assigns `[R-out, I-out, R-in, I-in]` rays to every node, preorder.
fn assign_rays(tree: &Tree, rays: &[usize], out: &mut Vec<[usize; 4]>) {
    let Some(slots) = tree.slots() else { return };
    let p0 = distinguished(rays).expect("a non-empty region contains a ray 0 mod 4");
    let mut pos = [p0; 4];
    for j in 1..4 {
        pos[j] = pos[j - 1] + 4 * slots[j - 1].node_count() + 1;
    }
    out.push(pos.map(|p| rays[p % rays.len()]));
    for (j, child) in slots.iter().enumerate() {
        assign_rays(child, &cyclic_slice(rays, pos[j] + 1, 4 * child.node_count()), out);
    }
}

/// The signature graph of a bi-regular signature: one `Root(1)` per node,
/// with vertex ids in preorder and edges `4i..4i+3` for node `i`.
pub fn biregular_to_graph(s: &BiRegularSignature) -> SignatureGraph {
    let d = s.degree();
    let mut crosses = Vec::with_capacity(d);
    assign_rays(s.tree(), &(0..4 * d).collect::<Vec<_>>(), &mut crosses);
    let mut g = SignatureGraph { degree: d, vertices: Vec::new(), edges: Vec::new(), rotation: BTreeMap::new() };
    for (i, rays) in crosses.iter().enumerate() {
        let v = Endpoint::Vertex(i);
        g.vertices.push(Vertex { id: i, kind: VertexKind::Root(1) });
        let e = 4 * i;
        g.edges.push(Edge { id: e, colour: Colour::R, tail: v, head: Endpoint::Ray(rays[0]) });
        g.edges.push(Edge { id: e + 1, colour: Colour::I, tail: v, head: Endpoint::Ray(rays[1]) });
        g.edges.push(Edge { id: e + 2, colour: Colour::R, tail: Endpoint::Ray(rays[2]), head: v });
        g.edges.push(Edge { id: e + 3, colour: Colour::I, tail: Endpoint::Ray(rays[3]), head: v });
        g.rotation.insert(
            i,
            vec![
                EdgeEnd::new(e, End::Tail),
                EdgeEnd::new(e + 1, End::Tail),
                EdgeEnd::new(e + 2, End::Head),
                EdgeEnd::new(e + 3, End::Head),
            ],
        );
    }
    g
}

/// Rebuilds the tree from the four rays of every root's cross.
pub fn tree_from_crosses(degree: usize, crosses: &[[usize; 4]]) -> Result<BiRegularSignature, SignatureError> {
    if crosses.len() != degree {
        return Err(SignatureError::InconsistentPicture(format!("{} crosses for degree {degree}", crosses.len())));
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (i, c) in crosses.iter().enumerate() {
        for (j, &k) in c.iter().enumerate() {
            if k >= 4 * degree || k % 4 != j || owner.insert(k, i).is_some() {
                return Err(SignatureError::InconsistentPicture(format!("ray {k} of cross {i} is misplaced")));
            }
        }
    }
    let all: Vec<usize> = (0..4 * degree).collect();
    split_region(&all, crosses, &owner).map(BiRegularSignature)
}

fn split_region(rays: &[usize], crosses: &[[usize; 4]], owner: &HashMap<usize, usize>) -> Result<Tree, SignatureError> {
    if rays.is_empty() {
        return Ok(Tree::Empty);
    }
    let bad = |msg: String| SignatureError::InconsistentPicture(msg);
    if rays.len() % 4 != 0 {
        return Err(bad(format!("region with {} rays", rays.len())));
    }
    let p0 = distinguished(rays).ok_or_else(|| bad("region without a ray 0 mod 4".into()))?;
    let cross = crosses[owner[&rays[p0]]];
    let n = rays.len();
    let mut offsets = [0usize; 4];
    for j in 1..4 {
        let p = rays.iter().position(|&k| k == cross[j]).ok_or_else(|| bad(format!("ray {} leaves its region", cross[j])))?;
        offsets[j] = (p + n - p0) % n;
    }
    if !(offsets[1] < offsets[2] && offsets[2] < offsets[3]) {
        return Err(bad(format!("cross at ray {} is not counterclockwise", rays[p0])));
    }
    let mut slots: [Tree; 4] = Default::default();
    for j in 0..4 {
        let end = if j == 3 { n } else { offsets[j + 1] };
        let sub = cyclic_slice(rays, p0 + offsets[j] + 1, end - offsets[j] - 1);
        // a cross must not straddle two sub-regions
        for &k in &sub {
            if crosses[owner[&k]].iter().any(|r| !sub.contains(r)) {
                return Err(bad(format!("cross through ray {k} straddles two regions")));
            }
        }
        slots[j] = split_region(&sub, crosses, owner)?;
    }
    Ok(Tree::node(slots))
}

/// Signature of a traced bi-regular picture, from the ray endpoints of the crosses.
pub fn picture_to_signature(pic: &GeometricPicture) -> Result<BiRegularSignature, SignatureError> {
    let crosses = (0..pic.roots.len())
        .map(|r| {
            pic.root_rays(r)
                .map(|rays| rays.map(|k| k.0))
                .ok_or_else(|| SignatureError::InconsistentPicture(format!("root {r} has no cross")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    tree_from_crosses(pic.degree, &crosses)
}

/// The tree of a graph whose inner vertices are all `Root(1)` crosses joined
/// directly to rays; `None` otherwise.
pub fn graph_to_biregular(g: &SignatureGraph) -> Option<BiRegularSignature> {
    let mut crosses = Vec::new();
    for v in &g.vertices {
        if v.kind != VertexKind::Root(1) {
            return None;
        }
        let mut cross = [usize::MAX; 4];
        for &ee in g.rotation_of(v.id) {
            let e = g.edge(ee.edge)?;
            let Endpoint::Ray(k) = e.endpoint(ee.end.opposite()) else { return None };
            cross[k % 4] = k;
        }
        if cross.contains(&usize::MAX) {
            return None;
        }
        crosses.push(cross);
    }
    tree_from_crosses(g.degree, &crosses).ok()
}
