//! Walls (codimension-1 signatures) generated by diagonal contraction.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::trees::enumerate_biregular;
use crate::signature::{biregular_to_graph, canonical_encoding, contract_diagonal, regions, SignatureGraph};

/// Every legal diagonal contraction of `g`, keyed by canonical encoding.
pub fn diagonal_contractions(g: &SignatureGraph) -> BTreeMap<String, SignatureGraph> {
    let mut out = BTreeMap::new();
    let Ok(regs) = regions(g) else { return out };
    for r in &regs {
        let mut edges: Vec<usize> = r.boundary.iter().map(|s| s.edge).collect();
        edges.sort_unstable();
        edges.dedup();
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if g.edge(a).map(|e| e.colour) != g.edge(b).map(|e| e.colour) {
                    continue;
                }
                if let Ok(w) = contract_diagonal(g, r.id, a, b) {
                    out.entry(canonical_encoding(&w)).or_insert(w);
                }
            }
        }
    }
    out
}

/// All walls of degree `d` with a representative graph each.
pub fn wall_graphs(d: usize) -> BTreeMap<String, SignatureGraph> {
    let trees: Vec<_> = enumerate_biregular(d).collect();
    trees
        .par_iter()
        .map(|s| diagonal_contractions(&biregular_to_graph(s)))
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        })
}

/// Canonical encodings of all walls of degree `d`.
pub fn enumerate_walls(d: usize) -> BTreeSet<String> {
    wall_graphs(d).into_keys().collect()
}
