use std::collections::{BTreeMap, HashSet};
use std::f64::consts::PI;

use serde::Serialize;

use super::graph::{Endpoint, SignatureGraph, VertexKind};
use crate::polynomial::Complex;
use crate::rays::Colour;

/// `α = e^{2πi·alpha_k/2d}` and `β = e^{2πi(2·beta_k+1)/4d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootLabel {
    pub alpha_k: usize,
    pub beta_k: usize,
}

impl RootLabel {
    pub fn alpha(self, degree: usize) -> Complex {
        Complex::from_polar(1.0, 2.0 * PI * self.alpha_k as f64 / (2 * degree) as f64)
    }

    pub fn beta(self, degree: usize) -> Complex {
        Complex::from_polar(1.0, 2.0 * PI * (2 * self.beta_k + 1) as f64 / (4 * degree) as f64)
    }
}

/// Rays reached from `start` by walking forward along edges of `colour`.
fn forward_rays(g: &SignatureGraph, start: usize, colour: Colour) -> Vec<usize> {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    let mut rays = Vec::new();
    while let Some(v) = stack.pop() {
        for &ee in g.rotation_of(v) {
            if !ee.is_out() || g.colour_of(ee) != Some(colour) {
                continue;
            }
            match g.far_endpoint(ee) {
                Some(Endpoint::Ray(k)) => rays.push(k),
                Some(Endpoint::Vertex(u)) if seen.insert(u) => stack.push(u),
                _ => {}
            }
        }
    }
    rays
}

/// Labels every root vertex by the smallest outgoing `R` and `I` ends it reaches.
pub fn label_roots(g: &SignatureGraph) -> BTreeMap<usize, RootLabel> {
    g.vertices
        .iter()
        .filter(|v| matches!(v.kind, VertexKind::Root(_)))
        .filter_map(|v| {
            let alpha = forward_rays(g, v.id, Colour::R).into_iter().min()?;
            let beta = forward_rays(g, v.id, Colour::I).into_iter().min()?;
            Some((v.id, RootLabel { alpha_k: alpha / 2, beta_k: (beta - 1) / 2 }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::{biregular_to_graph, BiRegularSignature};

    #[test]
    fn cross_label() {
        let g = biregular_to_graph(&"(....)".parse::<BiRegularSignature>().unwrap());
        let labels = label_roots(&g);
        assert_eq!(labels[&0], RootLabel { alpha_k: 0, beta_k: 0 });
        assert!((labels[&0].alpha(1) - Complex::new(1.0, 0.0)).norm() < 1e-15);
        assert!((labels[&0].beta(1) - Complex::new(0.0, 1.0)).norm() < 1e-15);
    }
}
