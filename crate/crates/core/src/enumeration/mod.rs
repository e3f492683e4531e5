//! Exact counts, exhaustive enumeration of signatures and walls, and
//! Monte-Carlo frequencies of signatures among random polynomials.

mod counting;
mod sampling;
mod trees;
mod walls;

pub use counting::{binomial, catalan_d, catalan_sequence, pict_count, pict_sequence, wall_count};
pub use sampling::{sample_distribution, sample_distribution_with, sample_polynomial, SignatureHistogram};
pub use trees::{compositions, enumerate_biregular, enumerate_biregular_part, BiRegularIter};
pub use walls::{diagonal_contractions, enumerate_walls, wall_graphs};

/// `d<TAB>value` lines for `d` in `range`.
pub fn counts_table(range: std::ops::RangeInclusive<usize>, f: impl Fn(usize) -> num_bigint::BigUint) -> String {
    range.map(|d| format!("{d}\t{}\n", f(d))).collect()
}
