use serde::{Deserialize, Serialize};

use super::TraceError;
use crate::polynomial::Complex;
use crate::rays::{chords_noncrossing, Colour, RayIndex};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    /// Index into `GeometricPicture::roots`.
    pub root: usize,
    /// Strand parameter at the root; `0` for a traced strand.
    pub param: f64,
}

/// A traced component of `P⁻¹(ℝ)` or `P⁻¹(iℝ)`, oriented by increasing `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Strand {
    pub colour: Colour,
    /// Ingoing end.
    pub start_ray: RayIndex,
    /// Outgoing end.
    pub end_ray: RayIndex,
    pub points: Vec<Complex>,
    /// `t` at each point, with `P = t` (colour `R`) or `P = it` (colour `I`).
    /// Not part of the JSON form.
    #[serde(skip)]
    pub params: Vec<f64>,
    pub crossings: Vec<Crossing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometricPicture {
    pub degree: usize,
    /// `R`-strands first, each colour ordered by start ray.
    pub strands: Vec<Strand>,
    pub roots: Vec<Complex>,
}

impl GeometricPicture {
    pub fn new(degree: usize, mut strands: Vec<Strand>, roots: Vec<Complex>) -> Self {
        strands.sort_by_key(|s| (s.colour, s.start_ray));
        GeometricPicture { degree, strands, roots }
    }

    pub fn strands_of(&self, colour: Colour) -> impl Iterator<Item = &Strand> {
        self.strands.iter().filter(move |s| s.colour == colour)
    }

    /// The four rays of the cross at `root`, in the order R-out, I-out, R-in, I-in.
    pub fn root_rays(&self, root: usize) -> Option<[RayIndex; 4]> {
        let find = |c: Colour| self.strands_of(c).find(|s| s.crossings.iter().any(|x| x.root == root));
        let r = find(Colour::R)?;
        let i = find(Colour::I)?;
        Some([r.end_ray, i.end_ray, r.start_ray, i.start_ray])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("picture serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Checks ray parity and orientation, single use of every ray, the
    /// crossing bijection and noncrossing of both chord systems.
    pub fn check(&self) -> Result<(), TraceError> {
        let d = self.degree;
        let n = 4 * d;
        let mut used = vec![false; n];
        for s in &self.strands {
            for (ray, outgoing) in [(s.start_ray, false), (s.end_ray, true)] {
                if ray.0 >= n {
                    return Err(TraceError::Inconsistent(format!("ray {ray} out of range")));
                }
                if ray.colour() != s.colour || ray.is_outgoing() != outgoing {
                    return Err(TraceError::Inconsistent(format!(
                        "{} strand has {} end at ray {ray}",
                        s.colour,
                        if outgoing { "outgoing" } else { "ingoing" }
                    )));
                }
                if std::mem::replace(&mut used[ray.0], true) {
                    return Err(TraceError::Inconsistent(format!("ray {ray} used twice")));
                }
            }
        }
        if used.iter().any(|u| !u) {
            return Err(TraceError::Inconsistent("some ray is unused".into()));
        }
        for colour in [Colour::R, Colour::I] {
            let mut claimed = vec![0usize; self.roots.len()];
            for s in self.strands_of(colour) {
                if s.crossings.len() != 1 {
                    return Err(TraceError::Inconsistent(format!("{colour} strand with {} crossings", s.crossings.len())));
                }
                let c = s.crossings[0];
                if c.root >= self.roots.len() {
                    return Err(TraceError::CrossingMatchFailed { root: c.root });
                }
                claimed[c.root] += 1;
            }
            if let Some(root) = claimed.iter().position(|&c| c != 1) {
                return Err(TraceError::CrossingMatchFailed { root });
            }
            let chords: Vec<(usize, usize)> = self.strands_of(colour).map(|s| (s.start_ray.0, s.end_ray.0)).collect();
            if !chords_noncrossing(&chords) {
                return Err(TraceError::Inconsistent(format!("{colour} pairing crosses")));
            }
        }
        if self.roots.len() != d {
            return Err(TraceError::Inconsistent(format!("{} roots for degree {d}", self.roots.len())));
        }
        // each cross must occupy its rays in counterclockwise order 0,1,2,3 (mod 4)
        for root in 0..d {
            let rays = self.root_rays(root).ok_or(TraceError::CrossingMatchFailed { root })?;
            let base = rays[0].0;
            let offsets: Vec<usize> = rays.iter().map(|r| (r.0 + n - base) % n).collect();
            if !(offsets[0] < offsets[1] && offsets[1] < offsets[2] && offsets[2] < offsets[3]) {
                return Err(TraceError::Inconsistent(format!("cross at root {root} is not counterclockwise")));
            }
        }
        Ok(())
    }
}
