//! Randomised invariants.

use std::collections::BTreeMap;

use geopict::enumeration::{catalan_d, pict_count, pict_sequence, sample_distribution, wall_count};
use geopict::polynomial::{classify, roots, Complex, Polynomial, DEFAULT_TOL};
use geopict::rays::{ray_of_point, Colour};
use geopict::render::{render_svg, RenderOptions};
use geopict::signature::{
    biregular_to_graph, canonical_encoding, graph_to_biregular, picture_to_signature, validate, BiRegularSignature,
    EdgeEnd, Endpoint, SignatureGraph, Tree,
};
use geopict::tracing::{extract_picture_with, TraceOptions};
use num_bigint::BigUint;
use proptest::prelude::*;

fn complex(bound: f64) -> impl Strategy<Value = Complex> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| Complex::new(re, im))
}

fn tree() -> impl Strategy<Value = Tree> {
    Just(Tree::Empty).prop_recursive(3, 10, 4, |inner| {
        prop::array::uniform4(inner).prop_map(Tree::node)
    })
}

fn nonempty_tree() -> impl Strategy<Value = Tree> {
    prop::array::uniform4(tree()).prop_map(Tree::node)
}

/// Same graph with vertex and edge ids permuted and storage order shuffled.
fn relabel(g: &SignatureGraph, vperm: &[usize], eperm: &[usize]) -> SignatureGraph {
    let mut h = g.clone();
    let map_end = |p: Endpoint| match p {
        Endpoint::Vertex(v) => Endpoint::Vertex(vperm[v]),
        r => r,
    };
    for v in &mut h.vertices {
        v.id = vperm[v.id];
    }
    for e in &mut h.edges {
        e.id = eperm[e.id];
        e.tail = map_end(e.tail);
        e.head = map_end(e.head);
    }
    h.rotation = g
        .rotation
        .iter()
        .map(|(&v, rot)| (vperm[v], rot.iter().map(|x| EdgeEnd::new(eperm[x.edge], x.end)).collect()))
        .collect::<BTreeMap<_, _>>();
    h.vertices.reverse();
    h.edges.sort_by_key(|e| e.id);
    h
}

/// `Pict(n+1)` as the plain sum over `i + j + k + l = n`.
fn pict_naive(n: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::from(1u32)];
    for m in 0..n {
        let mut s = BigUint::from(0u32);
        for i in 0..=m {
            for j in 0..=m - i {
                for k in 0..=m - i - j {
                    s += &p[i] * &p[j] * &p[k] * &p[m - i - j - k];
                }
            }
        }
        p.push(s);
    }
    p
}

#[test]
fn closed_forms_agree_up_to_40() {
    // both functions assert recurrence = closed form internally
    for d in 0..=40 {
        catalan_d(d);
        pict_count(d);
    }
    assert_eq!(pict_sequence(20), pict_naive(20));
    // wall formula against the naive Pict values
    let p = pict_naive(12);
    for d in 3..=12 {
        let s: BigUint = (1..d).map(|a| &p[a] * &p[d - a]).sum();
        assert_eq!(wall_count(d), s * (2 * d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vieta_roots_recovered(rs in prop::collection::vec(complex(2.0), 1..7)) {
        let p = Polynomial::from_roots(&rs);
        prop_assert_eq!(p.degree(), rs.len());
        // sum of roots is -c_{d-1}
        let sum: Complex = rs.iter().sum();
        prop_assert!((p.coeff(rs.len() - 1) + sum).norm() < 1e-9);
        let found = roots(&p, DEFAULT_TOL).unwrap();
        for r in &rs {
            let nearest = found.iter().map(|f| (f.value - r).norm()).fold(f64::INFINITY, f64::min);
            // clustered random roots converge more slowly
            prop_assert!(nearest < 1e-4, "root {} missed by {}", r, nearest);
        }
    }

    #[test]
    fn scaling_action_composes_and_scales_roots(
        rs in prop::collection::vec(complex(1.5), 2..6),
        s in 0.2f64..3.0,
        t in 0.2f64..3.0,
    ) {
        let p = Polynomial::from_roots(&rs);
        let a = p.scale_action(s).unwrap().scale_action(t).unwrap();
        let b = p.scale_action(s * t).unwrap();
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            prop_assert!((x - y).norm() < 1e-9 * (1.0 + y.norm()));
        }
        // t∙P has roots t·r
        let tp = p.scale_action(t).unwrap();
        for r in &rs {
            prop_assert!(tp.evaluate(r * t).norm() < 1e-8 * (1.0 + tp.coefficient_scale()));
        }
    }

    #[test]
    fn balancing_kills_the_subleading_coefficient(rs in prop::collection::vec(complex(2.0), 2..7), z in complex(1.0)) {
        let p = Polynomial::from_roots(&rs);
        let (b, shift) = p.balance().unwrap();
        prop_assert!(b.coeff(b.degree() - 1).norm() < 1e-10);
        prop_assert!((b.evaluate(z) - p.evaluate(z + shift)).norm() < 1e-8 * (1.0 + p.evaluate(z + shift).norm()));
    }

    #[test]
    fn normalization_gives_unit_norm(rs in prop::collection::vec(complex(2.0), 2..7)) {
        let p = Polynomial::from_roots(&rs);
        if let Ok(n) = p.normalize() {
            prop_assert!((n.polynomial.tail_norm() - 1.0).abs() < 1e-9);
            prop_assert!(n.scale > 0.0);
        }
    }

    #[test]
    fn tree_text_round_trip(t in tree()) {
        let s = BiRegularSignature(t);
        let text = s.to_string();
        prop_assert_eq!(text.parse::<BiRegularSignature>().unwrap(), s);
    }

    #[test]
    fn tree_graphs_are_valid_and_invertible(t in nonempty_tree()) {
        let s = BiRegularSignature(t);
        let g = biregular_to_graph(&s);
        prop_assert_eq!(validate(&g), vec![]);
        prop_assert_eq!(g.codimension(), 0);
        prop_assert_eq!(graph_to_biregular(&g), Some(s));
    }

    #[test]
    fn canonical_encoding_ignores_labels(
        t in nonempty_tree(),
        seed in any::<u64>(),
    ) {
        let g = biregular_to_graph(&BiRegularSignature(t));
        let (nv, ne) = (g.vertices.len(), g.edges.len());
        // a fixed permutation family driven by the seed
        let vperm: Vec<usize> = (0..nv).map(|i| (i + seed as usize % nv.max(1)) % nv).collect();
        let step = [1, 3, 5, 7].into_iter().find(|s| num_integer::gcd(*s, ne) == 1).unwrap_or(1);
        let eperm: Vec<usize> = (0..ne).map(|i| (i * step + (seed >> 8) as usize) % ne).collect();
        let h = relabel(&g, &vperm, &eperm);
        prop_assert_eq!(validate(&h), vec![]);
        prop_assert_eq!(canonical_encoding(&h), canonical_encoding(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn traced_strands_lie_on_their_fibres(cs in prop::collection::vec(complex(1.0), 1..4)) {
        let mut coeffs = cs.clone();
        coeffs.push(Complex::new(0.0, 0.0));
        coeffs.push(Complex::new(1.0, 0.0));
        let p = Polynomial::new(coeffs).unwrap();
        prop_assume!(matches!(classify(&p, DEFAULT_TOL), Ok(c) if c.biregular));
        let pic = extract_picture_with(&p, TraceOptions::default()).unwrap();
        let d = p.degree();
        prop_assert_eq!(pic.strands.len(), 2 * d);
        for s in &pic.strands {
            for z in &s.points {
                let w = p.evaluate(*z);
                let off = match s.colour { Colour::R => w.im, Colour::I => w.re };
                prop_assert!(off.abs() < 1e-7 * (1.0 + w.norm()), "off fibre by {}", off);
            }
            let last = *s.points.last().unwrap();
            prop_assert_eq!(ray_of_point(last, d).unwrap(), s.end_ray);
        }
        let sig = picture_to_signature(&pic).unwrap();
        prop_assert_eq!(sig.degree(), d);
        let svg = render_svg(&pic, &RenderOptions::default()).unwrap();
        prop_assert_eq!(svg.matches("<polyline").count(), 2 * d);
    }
}

#[test]
fn histogram_totals_and_rejection_rate() {
    for d in 1..=4 {
        let n = 2000;
        let h = sample_distribution(d, n, 42);
        assert_eq!(h.accepted() + h.rejected, n);
        assert!((h.rejected as f64) < 0.01 * n as f64, "d = {d}: {} rejected", h.rejected);
    }
}
