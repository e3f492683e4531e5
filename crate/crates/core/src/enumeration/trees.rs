//! Exhaustive generation of quaternary trees.
//!
//! Order: the sizes `(a, b, c, d)` of the four subtrees run over the
//! compositions of `n - 1` lexicographically; within one composition the slot
//! A varies slowest and each slot follows the order of its own size.

use std::sync::Arc;

use crate::signature::{BiRegularSignature, Tree};

/// Weak compositions of `n` into four parts, lexicographic.
pub fn compositions(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                out.push([a, b, c, n - a - b - c]);
            }
        }
    }
    out
}

/// All trees of every size `0..n`, each list in enumeration order.
fn smaller_trees(n: usize) -> Vec<Vec<Tree>> {
    let mut by_size: Vec<Vec<Tree>> = vec![vec![Tree::Empty]];
    for size in 1..n {
        let mut level = Vec::new();
        for comp in compositions(size - 1) {
            level.extend(Product::new(&by_size, comp));
        }
        by_size.push(level);
    }
    by_size
}

/// Odometer over the four slot lists of one composition.
struct Product<'a> {
    lists: [&'a [Tree]; 4],
    idx: [usize; 4],
    done: bool,
}

impl<'a> Product<'a> {
    fn new(by_size: &'a [Vec<Tree>], comp: [usize; 4]) -> Self {
        let lists = comp.map(|s| by_size[s].as_slice());
        let done = lists.iter().any(|l| l.is_empty());
        Product { lists, idx: [0; 4], done }
    }
}

impl Iterator for Product<'_> {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let tree = Tree::node(std::array::from_fn(|j| self.lists[j][self.idx[j]].clone()));
        // advance the last slot first so slot A varies slowest
        let mut j = 4;
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            self.idx[j] += 1;
            if self.idx[j] < self.lists[j].len() {
                break;
            }
            self.idx[j] = 0;
        }
        Some(tree)
    }
}

/// Lazy stream of every bi-regular signature of degree `d`.
pub struct BiRegularIter {
    cache: Arc<Vec<Vec<Tree>>>,
    comps: std::vec::IntoIter<[usize; 4]>,
    current: Option<ProductOwned>,
    /// `d = 0` yields the empty tree once.
    empty_pending: bool,
}

/// `Product` over an owned cache handle.
struct ProductOwned {
    cache: Arc<Vec<Vec<Tree>>>,
    comp: [usize; 4],
    idx: [usize; 4],
    done: bool,
}

impl Iterator for ProductOwned {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.done {
            return None;
        }
        let mut p = Product { lists: self.comp.map(|s| self.cache[s].as_slice()), idx: self.idx, done: false };
        let t = p.next();
        self.idx = p.idx;
        self.done = p.done;
        t
    }
}

impl Iterator for BiRegularIter {
    type Item = BiRegularSignature;

    fn next(&mut self) -> Option<BiRegularSignature> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(BiRegularSignature(Tree::Empty));
        }
        loop {
            if let Some(t) = self.current.as_mut().and_then(Iterator::next) {
                return Some(BiRegularSignature(t));
            }
            let comp = self.comps.next()?;
            self.current = Some(ProductOwned { cache: Arc::clone(&self.cache), comp, idx: [0; 4], done: false });
        }
    }
}

fn iter_over(d: usize, comps: Vec<[usize; 4]>) -> BiRegularIter {
    BiRegularIter {
        cache: Arc::new(if d == 0 { Vec::new() } else { smaller_trees(d) }),
        comps: comps.into_iter(),
        current: None,
        empty_pending: d == 0,
    }
}

/// Every quaternary tree with `d` nodes, exactly once, in composition order.
pub fn enumerate_biregular(d: usize) -> BiRegularIter {
    iter_over(d, if d == 0 { Vec::new() } else { compositions(d - 1) })
}

/// The trees of degree `d >= 1` whose top-level subtree sizes are `comp`;
/// the streams over `compositions(d - 1)` partition `enumerate_biregular(d)`.
pub fn enumerate_biregular_part(d: usize, comp: [usize; 4]) -> BiRegularIter {
    assert!(d >= 1 && comp.iter().sum::<usize>() + 1 == d, "composition must sum to d - 1");
    iter_over(d, vec![comp])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn degree_one_is_the_cross() {
        let all: Vec<String> = enumerate_biregular(1).map(|s| s.to_string()).collect();
        assert_eq!(all, ["(....)"]);
    }

    #[test]
    fn degree_two_order() {
        let all: Vec<String> = enumerate_biregular(2).map(|s| s.to_string()).collect();
        assert_eq!(all, ["(...(....))", "(..(....).)", "(.(....)..)", "((....)...)"]);
    }

    #[test]
    fn counts_and_distinctness() {
        for (d, n) in [(0, 1), (1, 1), (2, 4), (3, 22), (4, 140), (5, 969)] {
            let all: Vec<BiRegularSignature> = enumerate_biregular(d).collect();
            assert_eq!(all.len(), n);
            assert!(all.iter().all(|s| s.degree() == d));
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), n);
        }
    }

    #[test]
    fn parts_partition_the_stream() {
        let whole: Vec<BiRegularSignature> = enumerate_biregular(4).collect();
        let parts: Vec<BiRegularSignature> =
            compositions(3).into_iter().flat_map(|c| enumerate_biregular_part(4, c)).collect();
        assert_eq!(whole, parts);
    }
}
