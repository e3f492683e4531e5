//! Monte-Carlo estimate of how often each bi-regular signature occurs.
//!
//! A sample is `z^d + c_{d-2} z^{d-2} + ... + c_0` with `(c_0, ..., c_{d-2})`
//! uniform on the unit sphere of `C^{d-1}`: independent standard complex
//! Gaussians, normalized. Sample `i` draws from its own ChaCha stream keyed
//! by `(seed, i)`, so the histogram does not depend on the worker count.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::polynomial::{classify, Complex, Polynomial};
use crate::signature::picture_to_signature;
use crate::tracing::{extract_picture_with, TraceOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureHistogram {
    pub degree: usize,
    pub seed: u64,
    /// Tree text of the signature → number of samples realizing it.
    pub counts: BTreeMap<String, u64>,
    pub total: u64,
    /// Samples that were not bucketed; includes `trace_failures`.
    pub rejected: u64,
    /// Classified bi-regular but tracing or decoding failed.
    pub trace_failures: u64,
}

impl SignatureHistogram {
    pub fn accepted(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Buckets by count descending, then by key.
    pub fn sorted(&self) -> Vec<(&str, u64)> {
        let mut rows: Vec<(&str, u64)> = self.counts.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        rows
    }

    /// One `key<TAB>count` line per bucket, in `sorted` order.
    pub fn to_text(&self) -> String {
        self.sorted().into_iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
    }
}

/// The random polynomial of sample `index`.
pub fn sample_polynomial(d: usize, seed: u64, index: u64) -> Polynomial {
    assert!(d >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut coeffs: Vec<Complex> = (0..d.saturating_sub(1))
        .map(|_| Complex::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
        .collect();
    let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        for c in &mut coeffs {
            *c /= norm;
        }
    }
    if d >= 2 {
        coeffs.push(Complex::new(0.0, 0.0));
    } else {
        coeffs = vec![Complex::new(0.0, 0.0)];
    }
    coeffs.push(Complex::new(1.0, 0.0));
    Polynomial::new(coeffs).expect("finite coefficients")
}

enum Outcome {
    Bucket(String),
    Rejected,
    TraceFailure,
}

fn run_sample(d: usize, seed: u64, index: u64, opts: TraceOptions) -> Outcome {
    let p = sample_polynomial(d, seed, index);
    match classify(&p, opts.tol) {
        Ok(c) if c.biregular => {}
        _ => return Outcome::Rejected,
    }
    let sig = extract_picture_with(&p, opts).ok().and_then(|pic| picture_to_signature(&pic).ok());
    match sig {
        Some(s) => Outcome::Bucket(s.to_string()),
        None => Outcome::TraceFailure,
    }
}

/// Samples with `TraceOptions::coarse`.
pub fn sample_distribution(d: usize, n_samples: u64, seed: u64) -> SignatureHistogram {
    sample_distribution_with(d, n_samples, seed, TraceOptions::coarse())
}

pub fn sample_distribution_with(d: usize, n_samples: u64, seed: u64, opts: TraceOptions) -> SignatureHistogram {
    assert!(d >= 1 && n_samples >= 1);
    let mut hist = SignatureHistogram {
        degree: d,
        seed,
        counts: BTreeMap::new(),
        total: n_samples,
        rejected: 0,
        trace_failures: 0,
    };
    let outcomes: Vec<Outcome> = (0..n_samples).into_par_iter().map(|i| run_sample(d, seed, i, opts)).collect();
    for o in outcomes {
        match o {
            Outcome::Bucket(k) => *hist.counts.entry(k).or_default() += 1,
            Outcome::Rejected => hist.rejected += 1,
            Outcome::TraceFailure => {
                hist.rejected += 1;
                hist.trace_failures += 1;
            }
        }
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_balanced_unit_vectors() {
        for d in 2..6 {
            for i in 0..20 {
                let p = sample_polynomial(d, 7, i);
                assert!(p.is_monic());
                assert_eq!(p.coeff(d - 1), Complex::new(0.0, 0.0));
                let n: f64 = p.coeffs()[..d - 1].iter().map(|c| c.norm_sqr()).sum();
                assert!((n - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        assert_eq!(sample_polynomial(4, 1, 3), sample_polynomial(4, 1, 3));
        assert_ne!(sample_polynomial(4, 1, 3), sample_polynomial(4, 1, 4));
        assert_ne!(sample_polynomial(4, 1, 3), sample_polynomial(4, 2, 3));
    }

    #[test]
    fn degree_one_single_bucket() {
        let h = sample_distribution(1, 5, 0);
        assert_eq!(h.counts.len(), 1);
        assert_eq!(h.counts["(....)"], 5);
        assert_eq!(h.to_text(), "(....)\t5\n");
    }
}
