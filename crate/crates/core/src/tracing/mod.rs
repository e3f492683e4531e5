//! Path continuation of the fibres `P(z) = t` and `P(z) = it`.
//!
//! Every strand is traced outwards from its root in both directions of `t`,
//! so the crossing of an `R`-strand and an `I`-strand is known by
//! construction and only the ray endpoints have to be discovered.

mod picture;

use thiserror::Error;

use crate::polynomial::{classify, roots, Complex, PolyError, Polynomial, DEFAULT_TOL};
use crate::rays::{ray_of_point, Colour, RayError, RayIndex};

pub use picture::{Crossing, GeometricPicture, Strand};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TraceError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("polynomial is not bi-regular near {location}")]
    NotBiRegular { location: Complex },
    #[error(transparent)]
    Ray(#[from] RayError),
    #[error("root {root} is not claimed by exactly one strand of each colour")]
    CrossingMatchFailed { root: usize },
    #[error("traced strands violate picture invariants: {0}")]
    Inconsistent(String),
}

/// Tuning of the continuation. Lengths are fractions of the Cauchy bound `B`
/// or of the local linearisation radius `|P'/P''|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceOptions {
    /// Upper bound on `|Δz|` as a fraction of `B`.
    pub step_fraction: f64,
    /// Upper bound on `|Δz|` as a fraction of `|P'/P''|`.
    pub curvature_fraction: f64,
    /// Abort threshold on `|P'|`; `None` selects `default_eps_wall`.
    pub eps_wall: Option<f64>,
    /// Tolerance handed to the classifier and root finder.
    pub tol: f64,
    /// How often the terminal parameter `T` may be doubled.
    pub max_doublings: usize,
    /// Retries with halved steps when the traced strands are inconsistent.
    pub max_retries: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions {
            step_fraction: 1.0 / 50.0,
            curvature_fraction: 0.1,
            eps_wall: None,
            tol: DEFAULT_TOL,
            max_doublings: 8,
            max_retries: 3,
        }
    }
}

impl TraceOptions {
    /// Coarser steps for when only the combinatorics of the picture matter;
    /// the consistency check and halving retries still apply.
    pub fn coarse() -> Self {
        TraceOptions { step_fraction: 1.0 / 10.0, curvature_fraction: 0.3, ..Self::default() }
    }

    /// Same options with every step bound halved.
    pub fn halved(self) -> Self {
        TraceOptions {
            step_fraction: self.step_fraction / 2.0,
            curvature_fraction: self.curvature_fraction / 2.0,
            ..self
        }
    }
}

/// `B = 1 + max_{k<d} |c_k|`; every root and critical point of a monic `P`
/// lies in `|z| < B`.
pub fn cauchy_bound(p: &Polynomial) -> f64 {
    let d = p.degree();
    1.0 + p.coeffs()[..d].iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Near-critical abort threshold, relative to the size of the coefficients of `P'`.
pub fn default_eps_wall(p: &Polynomial) -> f64 {
    let d = p.degree() as f64;
    let scale = p.coeffs().iter().enumerate().skip(1).map(|(k, c)| k as f64 * c.norm()).fold(d, f64::max);
    1e-7 * scale
}

pub(crate) struct Tracer<'a> {
    p: &'a Polynomial,
    dp: Polynomial,
    ddp: Polynomial,
    bound: f64,
    eps_wall: f64,
    opts: TraceOptions,
}

/// One half of a strand: samples `(s, z)` with `P(z) = dir · s`, from the root outwards.
struct Half {
    samples: Vec<(f64, Complex)>,
    ray: RayIndex,
}

impl<'a> Tracer<'a> {
    pub(crate) fn new(p: &'a Polynomial, opts: TraceOptions) -> Result<Self, TraceError> {
        let dp = p.derivative()?;
        let ddp = if p.degree() >= 2 { dp.derivative()? } else { Polynomial::constant(Complex::new(0.0, 0.0)) };
        Ok(Tracer {
            p,
            dp,
            ddp,
            bound: cauchy_bound(p),
            eps_wall: opts.eps_wall.unwrap_or_else(|| default_eps_wall(p)),
            opts,
        })
    }

    fn initial_t(&self) -> f64 {
        (4.0 * self.bound).powi(self.p.degree() as i32)
    }

    /// Follows `P(z) = dir · s` from `z0` (a root) with `s` running from 0 to `sign · T`.
    fn half(&self, z0: Complex, dir: Complex, sign: f64) -> Result<Half, TraceError> {
        let d = self.p.degree();
        let b = self.bound;
        let mut t_end = self.initial_t();
        let mut s = 0.0f64;
        let mut z = z0;
        let mut samples = vec![(0.0, z0)];
        let mut h_prev: Option<f64> = None;
        let mut doublings = 0;
        loop {
            while s.abs() < t_end {
                let dpv = self.dp.evaluate(z);
                if dpv.norm() < self.eps_wall {
                    return Err(TraceError::NotBiRegular { location: z });
                }
                let ddpv = self.ddp.evaluate(z);
                let rho = if ddpv.norm() > 0.0 { dpv.norm() / ddpv.norm() } else { f64::INFINITY };
                let cap = (self.opts.step_fraction * b).min(self.opts.curvature_fraction * rho);
                let mut h = match h_prev {
                    // small first step so the crossing tangents are resolved
                    None => cap * 1e-3,
                    Some(hp) => cap.min(2.0 * hp),
                };
                loop {
                    if h <= 1e-14 * z.norm().max(1.0) {
                        return Err(TraceError::NotBiRegular { location: z });
                    }
                    let mut ds = sign * h * dpv.norm();
                    if (s + ds).abs() > t_end {
                        ds = sign * t_end - s;
                    }
                    let predicted = z + dir * ds / dpv;
                    let target = dir * (s + ds);
                    if let Some(z1) = self.correct(predicted, target) {
                        if (z1 - predicted).norm() <= 0.5 * h.max((ds / dpv).norm()) {
                            s += ds;
                            z = z1;
                            samples.push((s, z));
                            h_prev = Some(h);
                            break;
                        }
                    }
                    h /= 2.0;
                }
            }
            if z.norm() >= 2.0 * b {
                match ray_of_point(z, d) {
                    Ok(ray) => return Ok(Half { samples, ray }),
                    Err(RayError::AmbiguousRay { .. }) if doublings < self.opts.max_doublings => {}
                    Err(e) => return Err(e.into()),
                }
            } else if doublings >= self.opts.max_doublings {
                return Err(RayError::AmbiguousRay { point: z, offset: f64::NAN }.into());
            }
            doublings += 1;
            t_end *= 2.0;
        }
    }

    /// Newton iteration onto `P(z) = target`.
    fn correct(&self, mut z: Complex, target: Complex) -> Option<Complex> {
        let scale = target.norm() + self.bound;
        for _ in 0..12 {
            let (pv, dpv) = self.p.eval_with_derivative(z);
            let delta = (pv - target) / dpv;
            if !(delta.re.is_finite() && delta.im.is_finite()) {
                return None;
            }
            z -= delta;
            if delta.norm() <= 1e-15 * z.norm().max(1.0) {
                break;
            }
        }
        let residual = (self.p.evaluate(z) - target).norm();
        (residual <= 1e-11 * scale).then_some(z)
    }

    /// The full strand of `colour` through `root`, oriented by increasing parameter.
    pub(crate) fn strand(&self, root_index: usize, root: Complex, colour: Colour) -> Result<Strand, TraceError> {
        let dir = match colour {
            Colour::R => Complex::new(1.0, 0.0),
            Colour::I => Complex::new(0.0, 1.0),
        };
        let back = self.half(root, dir, -1.0)?;
        let fwd = self.half(root, dir, 1.0)?;
        let mut params = Vec::with_capacity(back.samples.len() + fwd.samples.len() - 1);
        let mut points = Vec::with_capacity(params.capacity());
        for &(s, z) in back.samples.iter().rev().chain(fwd.samples.iter().skip(1)) {
            params.push(s);
            points.push(z);
        }
        Ok(Strand {
            colour,
            start_ray: back.ray,
            end_ray: fwd.ray,
            points,
            params,
            crossings: vec![Crossing { root: root_index, param: 0.0 }],
        })
    }
}

/// Roots of a bi-regular `P`, checked to be simple and well separated.
fn simple_roots(p: &Polynomial, tol: f64) -> Result<Vec<Complex>, TraceError> {
    let class = classify(p, tol)?;
    if !class.biregular {
        let crit = crate::polynomial::critical_data(p, tol)?;
        let scale = p.coefficient_scale();
        let location = crit
            .points
            .iter()
            .find(|cp| cp.value.re.abs() <= tol * scale || cp.value.im.abs() <= tol * scale)
            .map(|cp| cp.location)
            .unwrap_or_default();
        return Err(TraceError::NotBiRegular { location });
    }
    let rs = roots(p, tol)?;
    for (i, r) in rs.iter().enumerate() {
        if r.multiplicity != 1 {
            return Err(TraceError::CrossingMatchFailed { root: i });
        }
    }
    Ok(rs.into_iter().map(|r| r.value).collect())
}

fn trace_colour(tracer: &Tracer<'_>, rs: &[Complex], colour: Colour) -> Result<Vec<Strand>, TraceError> {
    let mut strands = rs
        .iter()
        .enumerate()
        .map(|(i, &r)| tracer.strand(i, r, colour))
        .collect::<Result<Vec<_>, _>>()?;
    strands.sort_by_key(|s| s.start_ray);
    Ok(strands)
}

/// The `d` strands of `P⁻¹(ℝ)` (axis `R`) or `P⁻¹(iℝ)` (axis `I`), ordered by start ray.
pub fn trace_axis(p: &Polynomial, axis: Colour, opts: TraceOptions) -> Result<Vec<Strand>, TraceError> {
    if !p.is_monic() {
        return Err(PolyError::NotMonic(p.leading()).into());
    }
    let rs = simple_roots(p, opts.tol)?;
    let tracer = Tracer::new(p, opts)?;
    trace_colour(&tracer, &rs, axis)
}

/// Traces both axes and checks the picture invariants, retrying with halved
/// steps when continuation produced an inconsistent picture.
pub fn extract_picture_with(p: &Polynomial, opts: TraceOptions) -> Result<GeometricPicture, TraceError> {
    if !p.is_monic() {
        return Err(PolyError::NotMonic(p.leading()).into());
    }
    let rs = simple_roots(p, opts.tol)?;
    let mut opts = opts;
    let mut last_err = None;
    for _ in 0..=opts.max_retries {
        let tracer = Tracer::new(p, opts)?;
        let attempt = trace_colour(&tracer, &rs, Colour::R).and_then(|r| {
            let i = trace_colour(&tracer, &rs, Colour::I)?;
            let pic = GeometricPicture::new(p.degree(), r.into_iter().chain(i).collect(), rs.clone());
            pic.check()?;
            Ok(pic)
        });
        match attempt {
            Ok(pic) => return Ok(pic),
            Err(e @ (TraceError::Inconsistent(_) | TraceError::Ray(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        opts = opts.halved();
    }
    Err(last_err.expect("at least one attempt"))
}

pub fn extract_picture(p: &Polynomial) -> Result<GeometricPicture, TraceError> {
    extract_picture_with(p, TraceOptions::default())
}
