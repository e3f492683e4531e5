//! Faces of the map obtained by joining consecutive rays with arcs at infinity.
//!
//! Darts: edge `i` (position in `g.edges`) gives `2i` (tail to head) and
//! `2i+1`; the arc from ray `k` to `k+1` gives `2E+2k` and its reverse
//! `2E+2k+1`. A face lies to the left of each of its darts.

use std::collections::HashMap;

use serde::Serialize;

use super::graph::{End, SignatureGraph};
use crate::rays::Quadrant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeSide {
    pub edge: usize,
    pub side: Side,
}

/// A complementary region of the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    /// Smallest sector `k` (between rays `k` and `k+1`) in the region; regions
    /// without a sector get ids from `4d` upwards.
    pub id: usize,
    /// Colour shared by all sectors, `None` if they disagree or there are none.
    pub colour: Option<Quadrant>,
    pub sectors: Vec<usize>,
    /// Edge sides in boundary order.
    pub boundary: Vec<EdgeSide>,
}

impl Region {
    pub fn touches(&self, edge: usize) -> Option<Side> {
        self.boundary.iter().find(|s| s.edge == edge).map(|s| s.side)
    }
}

pub(crate) struct FaceMap {
    pub regions: Vec<Region>,
    /// Region id on the left and right of each edge id.
    pub sides: HashMap<usize, (usize, usize)>,
    /// `V - E + F`, which is 2 for a connected planar rotation system.
    pub euler: i64,
}

/// Traces the faces; fails with a message when the rotation data does not
/// describe every dart exactly once.
pub(crate) fn face_map(g: &SignatureGraph) -> Result<FaceMap, String> {
    let n = g.ray_count();
    let ne = g.edges.len();
    let edge_pos: HashMap<usize, usize> = g.edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect();
    let dart_of = |edge: usize, end: End| -> Result<usize, String> {
        let i = *edge_pos.get(&edge).ok_or_else(|| format!("unknown edge {edge}"))?;
        Ok(2 * i + usize::from(end == End::Head))
    };
    let arc = |k: usize| 2 * ne + 2 * (k % n);
    let arc_rev = |k: usize| 2 * ne + 2 * (k % n) + 1;

    let mut rotations: Vec<Vec<usize>> = Vec::new();
    for v in &g.vertices {
        let rot = g.rotation_of(v.id).iter().map(|ee| dart_of(ee.edge, ee.end)).collect::<Result<Vec<_>, _>>()?;
        rotations.push(rot);
    }
    for k in 0..n {
        let ee = g.ray_edge(k).ok_or_else(|| format!("ray {k} has no edge"))?;
        rotations.push(vec![arc(k), dart_of(ee.edge, ee.end)?, arc_rev(k + n - 1)]);
    }

    let total = 2 * ne + 2 * n;
    let mut pos: Vec<Option<(usize, usize)>> = vec![None; total];
    for (node, rot) in rotations.iter().enumerate() {
        for (idx, &d) in rot.iter().enumerate() {
            if pos[d].replace((node, idx)).is_some() {
                return Err(format!("dart {d} occurs twice in the rotations"));
            }
        }
    }
    if let Some(d) = pos.iter().position(Option::is_none) {
        return Err(format!("dart {d} is missing from the rotations"));
    }
    let next = |d: usize| {
        let (node, idx) = pos[d ^ 1].expect("checked");
        let rot = &rotations[node];
        rot[(idx + rot.len() - 1) % rot.len()]
    };

    let mut face_of = vec![usize::MAX; total];
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for start in 0..total {
        if face_of[start] != usize::MAX {
            continue;
        }
        let f = faces.len();
        let mut orbit = Vec::new();
        let mut d = start;
        while face_of[d] == usize::MAX {
            face_of[d] = f;
            orbit.push(d);
            d = next(d);
        }
        faces.push(orbit);
    }

    let outer = face_of[arc_rev(0)];
    let mut regions = Vec::new();
    let mut region_of_face = vec![usize::MAX; faces.len()];
    let mut bounded = 0;
    for (f, orbit) in faces.iter().enumerate() {
        if f == outer {
            continue;
        }
        let mut sectors: Vec<usize> =
            orbit.iter().filter(|&&d| d >= 2 * ne && (d - 2 * ne) % 2 == 0).map(|&d| (d - 2 * ne) / 2).collect();
        sectors.sort_unstable();
        let boundary = orbit
            .iter()
            .filter(|&&d| d < 2 * ne)
            .map(|&d| EdgeSide { edge: g.edges[d / 2].id, side: if d % 2 == 0 { Side::Left } else { Side::Right } })
            .collect();
        let colour = match sectors.first() {
            Some(&k) if sectors.iter().all(|&j| j % 4 == k % 4) => Some(Quadrant::of_sector(k)),
            _ => None,
        };
        let id = match sectors.first() {
            Some(&k) => k,
            None => {
                bounded += 1;
                n + bounded - 1
            }
        };
        region_of_face[f] = id;
        regions.push(Region { id, colour, sectors, boundary });
    }
    regions.sort_by_key(|r| r.id);
    let mut sides = HashMap::new();
    for (i, e) in g.edges.iter().enumerate() {
        let left = region_of_face[face_of[2 * i]];
        let right = region_of_face[face_of[2 * i + 1]];
        sides.insert(e.id, (left, right));
    }
    let v = (g.vertices.len() + n) as i64;
    let e = (ne + n) as i64;
    let euler = v - e + faces.len() as i64;
    Ok(FaceMap { regions, sides, euler })
}

/// The regions of a structurally sound graph, ordered by id.
pub fn regions(g: &SignatureGraph) -> Result<Vec<Region>, super::SignatureError> {
    face_map(g).map(|m| m.regions).map_err(super::SignatureError::Malformed)
}
