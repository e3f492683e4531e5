//! Hand-built signature graphs of degenerate pictures.

use std::collections::BTreeMap;

use super::graph::{Edge, EdgeEnd, End, Endpoint, SignatureGraph, Vertex, VertexKind};
use crate::rays::Colour;

struct Builder {
    g: SignatureGraph,
}

impl Builder {
    fn new(degree: usize) -> Self {
        Builder { g: SignatureGraph { degree, vertices: Vec::new(), edges: Vec::new(), rotation: BTreeMap::new() } }
    }

    fn vertex(&mut self, kind: VertexKind) -> Endpoint {
        let id = self.g.vertices.len();
        self.g.vertices.push(Vertex { id, kind });
        Endpoint::Vertex(id)
    }

    fn edge(&mut self, colour: Colour, tail: Endpoint, head: Endpoint) -> usize {
        let id = self.g.edges.len();
        self.g.edges.push(Edge { id, colour, tail, head });
        id
    }

    /// Counterclockwise rotation of `v`, by edge ids.
    fn rotate(&mut self, v: Endpoint, edges: &[usize]) {
        let Endpoint::Vertex(id) = v else { panic!("rays have no rotation") };
        let rot = edges
            .iter()
            .map(|&e| {
                let end = if self.g.edges[e].tail == v { End::Tail } else { End::Head };
                EdgeEnd::new(e, end)
            })
            .collect();
        self.g.rotation.insert(id, rot);
    }
}

fn root() -> VertexKind {
    VertexKind::Root(1)
}

fn r_saddle(k: usize) -> VertexKind {
    VertexKind::Saddle { colour: Colour::R, k }
}

/// Picture of `z`: one root, four edges to rays 0..3.
pub fn cross() -> SignatureGraph {
    let mut b = Builder::new(1);
    let v = b.vertex(root());
    let e0 = b.edge(Colour::R, v, Endpoint::Ray(0));
    let e1 = b.edge(Colour::I, v, Endpoint::Ray(1));
    let e2 = b.edge(Colour::R, Endpoint::Ray(2), v);
    let e3 = b.edge(Colour::I, Endpoint::Ray(3), v);
    b.rotate(v, &[e0, e1, e2, e3]);
    b.g
}

/// Picture of `z^3 + 1`: a `Saddle(R, 3)` at 0 (critical value 1) whose
/// three ingoing arms pass through the cube roots of `-1`.
pub fn z3_plus_1() -> SignatureGraph {
    let mut b = Builder::new(3);
    let s = b.vertex(r_saddle(3));
    let mut saddle_rot = Vec::new();
    let mut roots = Vec::new();
    for j in 0..3 {
        let out = b.edge(Colour::R, s, Endpoint::Ray(4 * j));
        let r = b.vertex(root());
        let to_saddle = b.edge(Colour::R, r, s);
        saddle_rot.extend([out, to_saddle]);
        roots.push((r, to_saddle, j));
    }
    b.rotate(s, &saddle_rot);
    for (r, to_saddle, j) in roots {
        let i_out = b.edge(Colour::I, r, Endpoint::Ray(4 * j + 1));
        let r_in = b.edge(Colour::R, Endpoint::Ray(4 * j + 2), r);
        let i_in = b.edge(Colour::I, Endpoint::Ray(4 * j + 3), r);
        b.rotate(r, &[to_saddle, i_out, r_in, i_in]);
    }
    b.g
}

/// Picture of `z^3 - z/10 + 1`: two `Saddle(R, 2)` on the real line with
/// positive critical values, a real root left of them and two complex roots.
pub fn z3_minus_z10_plus_1() -> SignatureGraph {
    let mut b = Builder::new(3);
    let r0 = b.vertex(root());
    let s1 = b.vertex(r_saddle(2));
    let s2 = b.vertex(r_saddle(2));
    let r1 = b.vertex(root());
    let r2 = b.vertex(root());
    // real line, left to right
    let r0_in = b.edge(Colour::R, Endpoint::Ray(6), r0);
    let r0_s1 = b.edge(Colour::R, r0, s1);
    let s2_s1 = b.edge(Colour::R, s2, s1);
    let s2_out = b.edge(Colour::R, s2, Endpoint::Ray(0));
    // vertical arms: out of the maximum s1, into the minimum s2 through r1, r2
    let s1_up = b.edge(Colour::R, s1, Endpoint::Ray(4));
    let s1_down = b.edge(Colour::R, s1, Endpoint::Ray(8));
    let r1_in = b.edge(Colour::R, Endpoint::Ray(2), r1);
    let r1_s2 = b.edge(Colour::R, r1, s2);
    let r2_in = b.edge(Colour::R, Endpoint::Ray(10), r2);
    let r2_s2 = b.edge(Colour::R, r2, s2);
    let r0_iout = b.edge(Colour::I, r0, Endpoint::Ray(5));
    let r0_iin = b.edge(Colour::I, Endpoint::Ray(7), r0);
    let r1_iout = b.edge(Colour::I, r1, Endpoint::Ray(1));
    let r1_iin = b.edge(Colour::I, Endpoint::Ray(3), r1);
    let r2_iout = b.edge(Colour::I, r2, Endpoint::Ray(9));
    let r2_iin = b.edge(Colour::I, Endpoint::Ray(11), r2);
    b.rotate(r0, &[r0_s1, r0_iout, r0_in, r0_iin]);
    b.rotate(s1, &[s2_s1, s1_up, r0_s1, s1_down]);
    b.rotate(s2, &[s2_out, r1_s2, s2_s1, r2_s2]);
    b.rotate(r1, &[r1_s2, r1_iout, r1_in, r1_iin]);
    b.rotate(r2, &[r2_s2, r2_iout, r2_in, r2_iin]);
    b.g
}

/// Picture of a monic Chebyshev-type polynomial of degree `d`: `d` real
/// roots with `d - 1` real saddles of alternating sign between them.
pub fn chebyshev(d: usize) -> SignatureGraph {
    assert!(d >= 1);
    let n = 4 * d;
    let mut b = Builder::new(d);
    let xs: Vec<Endpoint> = (0..d).map(|_| b.vertex(root())).collect();
    let ss: Vec<Endpoint> = (0..d - 1).map(|_| b.vertex(r_saddle(2))).collect();
    // P > 0 to the right of x_j (0-based) iff d-1-j is even
    let positive_right = |j: usize| (d - 1 - j) % 2 == 0;
    let up_ray_root = |j: usize| 2 * (d - 1 - j) + 1;
    let up_ray_saddle = |j: usize| 2 * (d - 1 - j);

    // east and west real-line edges of every root
    let mut east = vec![0; d];
    let mut west = vec![0; d];
    east[d - 1] = b.edge(Colour::R, xs[d - 1], Endpoint::Ray(0));
    west[0] = if d % 2 == 0 {
        b.edge(Colour::R, xs[0], Endpoint::Ray(2 * d))
    } else {
        b.edge(Colour::R, Endpoint::Ray(2 * d), xs[0])
    };
    let mut saddle_edges = Vec::new();
    for j in 0..d - 1 {
        let (l, r) = if positive_right(j) {
            (b.edge(Colour::R, xs[j], ss[j]), b.edge(Colour::R, xs[j + 1], ss[j]))
        } else {
            (b.edge(Colour::R, ss[j], xs[j]), b.edge(Colour::R, ss[j], xs[j + 1]))
        };
        east[j] = l;
        west[j + 1] = r;
        let p = up_ray_saddle(j);
        let (up, down) = if positive_right(j) {
            (b.edge(Colour::R, ss[j], Endpoint::Ray(p)), b.edge(Colour::R, ss[j], Endpoint::Ray(n - p)))
        } else {
            (b.edge(Colour::R, Endpoint::Ray(p), ss[j]), b.edge(Colour::R, Endpoint::Ray(n - p), ss[j]))
        };
        saddle_edges.push([r, up, l, down]);
    }
    for j in 0..d {
        let q = up_ray_root(j);
        let (north, south) = if positive_right(j) {
            (b.edge(Colour::I, xs[j], Endpoint::Ray(q)), b.edge(Colour::I, Endpoint::Ray(n - q), xs[j]))
        } else {
            (b.edge(Colour::I, Endpoint::Ray(q), xs[j]), b.edge(Colour::I, xs[j], Endpoint::Ray(n - q)))
        };
        b.rotate(xs[j], &[east[j], north, west[j], south]);
    }
    for (j, rot) in saddle_edges.iter().enumerate() {
        b.rotate(ss[j], rot);
    }
    b.g
}
