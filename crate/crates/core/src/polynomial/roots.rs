//! Simultaneous root finding (Aberth–Ehrlich) with multiplicity clustering.

use super::{Complex, PolyError, Polynomial};

/// Iteration budget of the simultaneous iteration.
pub const ROOT_ITERATION_BUDGET: usize = 1000;

/// A root together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex,
    pub multiplicity: usize,
}

/// All roots of `p`, with clusters of radius `tol^{1/m}` merged into
/// multiplicity-`m` roots. Sorted by real part, then imaginary part.
pub fn roots(p: &Polynomial, tol: f64) -> Result<Vec<Root>, PolyError> {
    let raw = simultaneous_roots(p)?;
    check_residuals(p, &raw, tol)?;
    let mut out = cluster(&raw, tol);
    out.sort_by(|a, b| {
        a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(out)
}

/// The `d` solutions of `P(z) = w`, unclustered and in iteration order.
pub fn fiber(p: &Polynomial, w: Complex, tol: f64) -> Result<Vec<Complex>, PolyError> {
    let q = p.sub_constant(w);
    let raw = simultaneous_roots(&q)?;
    check_residuals(&q, &raw, tol)?;
    Ok(raw)
}

fn check_residuals(p: &Polynomial, raw: &[Complex], tol: f64) -> Result<(), PolyError> {
    let lead = p.leading().norm();
    let bound = tol * p.coefficient_scale() / lead.max(f64::MIN_POSITIVE);
    let residual = raw.iter().map(|&z| p.evaluate(z).norm() / lead).fold(0.0, f64::max);
    if residual.is_finite() && residual <= bound {
        Ok(())
    } else {
        Err(PolyError::RootFindingFailed { iterations: ROOT_ITERATION_BUDGET, residual })
    }
}

/// Raw Aberth–Ehrlich iteration from a perturbed circle.
pub(crate) fn simultaneous_roots(p: &Polynomial) -> Result<Vec<Complex>, PolyError> {
    let d = p.degree();
    if d == 0 {
        return Err(PolyError::DegreeTooLow { degree: 0, required: 1 });
    }
    let monic = p.to_monic();
    if d == 1 {
        return Ok(vec![-monic.coeff(0)]);
    }

    let center = -monic.coeff(d - 1) / d as f64;
    let shifted = monic.taylor_shift(center);
    // typical root radius around the centroid
    let radius = (0..d)
        .map(|k| shifted.coeff(k).norm().powf(1.0 / (d - k) as f64))
        .fold(0.0, f64::max);
    if radius == 0.0 {
        return Ok(vec![center; d]);
    }
    let mut z: Vec<Complex> = (0..d)
        .map(|j| {
            let angle = std::f64::consts::TAU * j as f64 / d as f64 + 0.4;
            center + Complex::from_polar(radius, angle)
        })
        .collect();

    let eps = f64::EPSILON;
    let mut done = vec![false; d];
    for _ in 0..ROOT_ITERATION_BUDGET {
        let mut active = false;
        for j in 0..d {
            if done[j] {
                continue;
            }
            let (pv, dpv) = monic.eval_with_derivative(z[j]);
            if pv.norm() <= 8.0 * eps * monic.abs_eval(z[j]) {
                done[j] = true;
                continue;
            }
            active = true;
            let ratio = pv / dpv;
            let mut repulsion = Complex::new(0.0, 0.0);
            for k in 0..d {
                if k != j {
                    let diff = z[j] - z[k];
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let mut step = ratio / (Complex::new(1.0, 0.0) - ratio * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                // stationary point of P or coincident estimates: nudge
                step = Complex::from_polar(radius * 1e-3, j as f64 + 0.3);
            }
            z[j] -= step;
            if step.norm() <= 4.0 * eps * z[j].norm() {
                done[j] = true;
            }
        }
        if !active {
            break;
        }
    }
    if z.iter().any(|r| !(r.re.is_finite() && r.im.is_finite())) {
        return Err(PolyError::RootFindingFailed {
            iterations: ROOT_ITERATION_BUDGET,
            residual: f64::INFINITY,
        });
    }
    Ok(z)
}

/// Greedy clustering, scanning multiplicities from `d` down to 2.
fn cluster(raw: &[Complex], tol: f64) -> Vec<Root> {
    let d = raw.len();
    let scale = raw.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let mut free: Vec<bool> = vec![true; d];
    let mut out = Vec::new();
    for m in (2..=d).rev() {
        let radius = tol.powf(1.0 / m as f64) * scale;
        for i in 0..d {
            if !free[i] {
                continue;
            }
            let mut near: Vec<(f64, usize)> = (0..d)
                .filter(|&j| free[j])
                .map(|j| ((raw[j] - raw[i]).norm(), j))
                .filter(|&(dist, _)| dist <= 2.0 * radius)
                .collect();
            if near.len() < m {
                continue;
            }
            near.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            near.truncate(m);
            let centroid = near.iter().map(|&(_, j)| raw[j]).sum::<Complex>() / m as f64;
            if near.iter().all(|&(_, j)| (raw[j] - centroid).norm() <= radius) {
                for &(_, j) in &near {
                    free[j] = false;
                }
                out.push(Root { value: centroid, multiplicity: m });
            }
        }
    }
    out.extend((0..d).filter(|&j| free[j]).map(|j| Root { value: raw[j], multiplicity: 1 }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::DEFAULT_TOL;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn z_squared_plus_one() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        let r = roots(&p, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.multiplicity == 1));
        let mut ims: Vec<f64> = r.iter().map(|x| x.value.im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-14 && (ims[1] - 1.0).abs() < 1e-14);
        assert!(r.iter().all(|x| x.value.re.abs() < 1e-14));
    }

    #[test]
    fn perfect_cube_is_one_triple_root() {
        let p = Polynomial::from_roots(&[c(1.0, 1.0); 3]);
        let r = roots(&p, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 3);
        assert!((r[0].value - c(1.0, 1.0)).norm() < 1e-9);
    }

    /// Sign changes of a real polynomial on a fine grid, refined by bisection.
    fn bisect_real_roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> Vec<f64> {
        let mut out = Vec::new();
        let h = (hi - lo) / n as f64;
        for k in 0..n {
            let (mut a, mut b) = (lo + k as f64 * h, lo + (k + 1) as f64 * h);
            if f(a) == 0.0 {
                out.push(a);
                continue;
            }
            if f(a).signum() == f(b).signum() {
                continue;
            }
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if f(a).signum() == f(m).signum() {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push(0.5 * (a + b));
        }
        out
    }

    #[test]
    fn monic_chebyshev_five_has_five_real_roots() {
        let p = Polynomial::from_real(&[0.0, 5.0 / 16.0, 0.0, -1.25, 0.0, 1.0]).unwrap();
        let r = roots(&p, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 5);
        let oracle = bisect_real_roots(|x| p.evaluate(c(x, 0.0)).re, -1.3, 1.3001, 2600);
        assert_eq!(oracle.len(), 5);
        for (root, x) in r.iter().zip(&oracle) {
            assert!(root.value.im.abs() < 1e-12);
            assert!((root.value.re - x).abs() < 1e-10, "{} vs {}", root.value.re, x);
            assert!(p.evaluate(root.value).norm() < 1e-10);
        }
        // cos((2k+1)π/10), the zeros of T5
        for (k, x) in oracle.iter().rev().enumerate() {
            let expected = ((2 * k + 1) as f64 * std::f64::consts::PI / 10.0).cos();
            assert!((x - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn fiber_examples() {
        for d in 1..7 {
            let pts = fiber(&Polynomial::monomial(d), c(1.0, 0.0), DEFAULT_TOL).unwrap();
            assert_eq!(pts.len(), d);
            for z in &pts {
                assert!((z.norm() - 1.0).abs() < 1e-13);
                assert!((z.powu(d as u32) - c(1.0, 0.0)).norm() < 1e-12);
            }
        }
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        let pts = fiber(&p, c(0.0, 0.0), DEFAULT_TOL).unwrap();
        assert!(pts.iter().any(|z| (z - c(0.0, 1.0)).norm() < 1e-14));
        assert!(pts.iter().any(|z| (z - c(0.0, -1.0)).norm() < 1e-14));
        // P - (1+i) = z^2: both fiber points collapse onto 0
        let q = Polynomial::new(vec![c(1.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let pts = fiber(&q, c(1.0, 1.0), DEFAULT_TOL).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|z| z.norm() < 1e-6));
    }

    #[test]
    fn degree_zero_is_rejected() {
        let p = Polynomial::constant(c(1.0, 0.0));
        assert!(matches!(roots(&p, DEFAULT_TOL), Err(PolyError::DegreeTooLow { .. })));
    }

    #[test]
    fn monomials_are_single_multiple_roots() {
        for d in 2..=6 {
            let r = roots(&Polynomial::monomial(d), DEFAULT_TOL).unwrap();
            assert_eq!(r.len(), 1, "degree {d}");
            assert_eq!(r[0].multiplicity, d);
            assert!(r[0].value.norm() < 1e-9);
        }
    }
}
