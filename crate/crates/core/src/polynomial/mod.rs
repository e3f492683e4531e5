//! Complex polynomials in the power basis.
//!
//! Coefficients are stored lowest degree first. Besides plain arithmetic this
//! module hosts the normalisation actions on monic polynomials (Tschirnhausen
//! balancing, the positive scaling action `t∙P = t^d P(z/t)`, unit-norm
//! normalisation), simultaneous root finding and the numeric stratum
//! classifier.

mod classify;
mod parse;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use classify::{
    classify, critical_data, CriticalData, CriticalPoint, StratumClass, DEFAULT_TOL,
};
pub use parse::{parse_coefficients, parse_complex, parse_expression, ParseError};
pub use roots::{fiber, roots, Root, ROOT_ITERATION_BUDGET};

/// Complex numbers used throughout the crate.
pub type Complex = num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("operation needs degree at least {required}, got {degree}")]
    DegreeTooLow { degree: usize, required: usize },
    #[error("root finding did not converge within {iterations} iterations (residual {residual:e})")]
    RootFindingFailed { iterations: usize, residual: f64 },
    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(Complex),
    #[error("scale factor must be positive, got {0}")]
    InvalidScale(f64),
    #[error("polynomial is a pure power (z-r)^d and cannot be normalised")]
    NotNormalizable,
    #[error("critical value {value} is too close to an axis to classify reliably")]
    NearWallAmbiguous { value: Complex },
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
}

/// A polynomial with complex coefficients, lowest degree first.
///
/// The leading coefficient is non-zero unless the polynomial is constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

/// Result of [`Polynomial::normalize`].
#[derive(Clone, Debug, PartialEq)]
pub struct Normalized {
    pub polynomial: Polynomial,
    /// The scale `t > 0` applied after balancing.
    pub scale: f64,
    /// The Tschirnhausen shift: the balanced polynomial is `P(z + shift)`.
    pub shift: Complex,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self, PolyError> {
        if let Some(index) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(PolyError::NonFinite { index });
        }
        Ok(Self::from_trusted(coeffs))
    }

    fn from_trusted(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    /// Polynomial with real coefficients, lowest degree first.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn constant(c: Complex) -> Self {
        Self::from_trusted(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Self::monomial(1)
    }

    /// `z^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![Complex::new(0.0, 0.0); d + 1];
        coeffs[d] = Complex::new(1.0, 0.0);
        Self { coeffs }
    }

    /// The monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex]) -> Self {
        let mut coeffs = vec![Complex::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::from_trusted(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> Complex {
        *self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex::new(0.0, 0.0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Complex::new(1.0, 0.0)
    }

    /// Sub-leading coefficient vanishes (degree at least one).
    pub fn is_balanced(&self) -> bool {
        let d = self.degree();
        d >= 1 && self.coeffs[d - 1] == Complex::new(0.0, 0.0)
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `1 + max |c_i|`, the scale used by all relative tolerances.
    pub fn coefficient_scale(&self) -> f64 {
        1.0 + self.max_coeff_modulus()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex) -> (Complex, Complex) {
        let mut p = Complex::new(0.0, 0.0);
        let mut dp = Complex::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `Σ |c_k| |z|^k`, the magnitude scale of a Horner evaluation at `z`.
    pub(crate) fn abs_eval(&self, z: Complex) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Result<Self, PolyError> {
        let d = self.degree();
        if d == 0 {
            return Err(PolyError::DegreeTooLow { degree: 0, required: 1 });
        }
        let coeffs = (1..=d).map(|k| self.coeffs[k] * k as f64).collect();
        Ok(Self::from_trusted(coeffs))
    }

    /// `P(z) - w`.
    pub fn sub_constant(&self, w: Complex) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] -= w;
        Self::from_trusted(coeffs)
    }

    /// `P(z + s)`, by repeated synthetic division.
    pub fn taylor_shift(&self, s: Complex) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = c[j + 1];
                c[j] += s * next;
            }
        }
        Self::from_trusted(c)
    }

    pub fn scale_coeffs(&self, factor: Complex) -> Self {
        Self::from_trusted(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    fn require_monic(&self) -> Result<(), PolyError> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(PolyError::NotMonic(self.leading()))
        }
    }

    /// Tschirnhausen substitution: returns `(P(z + shift), shift)` with the
    /// sub-leading coefficient killed, `shift = -c_{d-1}/d`.
    pub fn balance(&self) -> Result<(Self, Complex), PolyError> {
        self.require_monic()?;
        let d = self.degree();
        if d == 0 {
            return Err(PolyError::DegreeTooLow { degree: 0, required: 1 });
        }
        let shift = -self.coeffs[d - 1] / d as f64;
        if shift == Complex::new(0.0, 0.0) {
            return Ok((self.clone(), shift));
        }
        let mut shifted = self.taylor_shift(shift);
        // exact zero, rounding leaves ~eps residue otherwise
        shifted.coeffs[d - 1] = Complex::new(0.0, 0.0);
        Ok((shifted, shift))
    }

    /// The weighted homogeneous action `t∙P = t^d P(z/t)`: `c_k ↦ t^{d-k} c_k`.
    pub fn scale_action(&self, t: f64) -> Result<Self, PolyError> {
        self.require_monic()?;
        if !(t > 0.0 && t.is_finite()) {
            return Err(PolyError::InvalidScale(t));
        }
        let d = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * t.powi((d - k) as i32))
            .collect();
        Ok(Self::from_trusted(coeffs))
    }

    /// l²-norm of the non-leading coefficients.
    pub fn tail_norm(&self) -> f64 {
        let d = self.degree();
        self.coeffs[..d].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Balance, then pick the unique `t > 0` with `‖t∙P‖ = 1`, where the norm
    /// ignores the leading 1.
    pub fn normalize(&self) -> Result<Normalized, PolyError> {
        self.require_monic()?;
        let d = self.degree();
        if d < 2 {
            return Err(PolyError::DegreeTooLow { degree: d, required: 2 });
        }
        let scale = self.coefficient_scale();
        let (balanced, shift) = self.balance()?;
        let degenerate = balanced.coeffs[..d]
            .iter()
            .enumerate()
            .all(|(k, c)| c.norm() <= 1e-12 * scale.powi((d - k) as i32));
        if degenerate {
            return Err(PolyError::NotNormalizable);
        }
        let weights: Vec<(i32, f64)> = balanced.coeffs[..d]
            .iter()
            .enumerate()
            .map(|(k, c)| (2 * (d - k) as i32, c.norm_sqr()))
            .collect();
        let norm_sqr = |t: f64| weights.iter().map(|&(e, w)| w * t.powi(e)).sum::<f64>();

        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while norm_sqr(hi) < 1.0 {
            lo = hi;
            hi *= 2.0;
        }
        while norm_sqr(lo) > 1.0 && lo > 0.0 {
            lo /= 2.0;
        }
        if lo == hi {
            lo = 0.0;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if norm_sqr(mid) < 1.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = if (norm_sqr(lo) - 1.0).abs() <= (norm_sqr(hi) - 1.0).abs() { lo } else { hi };
        let polynomial = balanced.scale_action(t)?;
        Ok(Normalized { polynomial, scale: t, shift })
    }

    /// Divide by the leading coefficient.
    pub fn to_monic(&self) -> Self {
        let lead = self.leading();
        if lead == Complex::new(0.0, 0.0) {
            return self.clone();
        }
        let mut out = self.scale_coeffs(lead.inv());
        let d = out.degree();
        out.coeffs[d] = Complex::new(1.0, 0.0);
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_trusted((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_trusted((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = vec![Complex::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_trusted(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_trusted(self.coeffs.iter().map(|&c| -c).collect())
    }
}

fn write_real(f: &mut fmt::Formatter<'_>, x: f64) -> fmt::Result {
    // avoid "-0"
    let x = if x == 0.0 { 0.0 } else { x };
    write!(f, "{x}")
}

/// Formats a complex number as `a`, `bi` or `a+bi` / `a-bi`.
pub(crate) fn fmt_complex(f: &mut fmt::Formatter<'_>, c: Complex) -> fmt::Result {
    if c.im == 0.0 {
        write_real(f, c.re)
    } else if c.re == 0.0 {
        write_real(f, c.im)?;
        f.write_str("i")
    } else {
        write_real(f, c.re)?;
        if c.im > 0.0 {
            f.write_str("+")?;
        }
        write_real(f, c.im)?;
        f.write_str("i")
    }
}

/// The comma separated coefficient text format, lowest degree first.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            fmt_complex(f, c)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_coefficients(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn fig1() -> Polynomial {
        "3+2i,1,5,-1,1,0,0,-6,0,0,0,0,0,1".parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(Polynomial::identity().evaluate(c(3.0, 2.0)), c(3.0, 2.0));
        let p = Polynomial::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 0.0)), c(1.0, 0.0));
        assert_eq!(fig1().evaluate(c(0.0, 0.0)), c(3.0, 2.0));
        assert_eq!(fig1().degree(), 13);
    }

    #[test]
    fn derivative_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.derivative().unwrap(), Polynomial::from_real(&[0.0, 0.0, 3.0]).unwrap());
        for d in 1..8 {
            let dp = Polynomial::monomial(d).derivative().unwrap();
            assert_eq!(dp.degree(), d - 1);
            assert_eq!(dp.leading(), c(d as f64, 0.0));
        }
        let q = Polynomial::from_real(&[1.0, -0.1, 0.0, 1.0]).unwrap();
        assert_eq!(q.derivative().unwrap(), Polynomial::from_real(&[-0.1, 0.0, 3.0]).unwrap());
        assert_eq!(
            Polynomial::constant(c(2.0, 0.0)).derivative(),
            Err(PolyError::DegreeTooLow { degree: 0, required: 1 })
        );
    }

    #[test]
    fn balance_completes_the_square() {
        let p = Polynomial::from_real(&[2.0, 2.0, 1.0]).unwrap();
        let (b, shift) = p.balance().unwrap();
        assert_eq!(shift, c(-1.0, 0.0));
        assert_eq!(b, Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap());

        let q = Polynomial::from_real(&[1.0, 0.0, 0.0, 1.0]).unwrap();
        let (b, shift) = q.balance().unwrap();
        assert_eq!(shift, c(0.0, 0.0));
        assert_eq!(b, q);

        let not_monic = Polynomial::from_real(&[1.0, 2.0]).unwrap();
        assert!(matches!(not_monic.balance(), Err(PolyError::NotMonic(_))));
    }

    #[test]
    fn balance_of_fig2_polynomial() {
        // (z - i/3)^3 + (z - i/3)^2 + 1
        let w = Polynomial::new(vec![c(0.0, -1.0 / 3.0), c(1.0, 0.0)]).unwrap();
        let w2 = &w * &w;
        let p = &(&(&w2 * &w) + &w2) + &Polynomial::constant(c(1.0, 0.0));
        assert!(p.is_monic());
        let (b, shift) = p.balance().unwrap();
        assert!((shift - c(-1.0 / 3.0, 1.0 / 3.0)).norm() < 1e-15);
        assert!(b.is_balanced());
        // the shift undoes i/3 and then balances w^3 + w^2 + 1 by w -> w - 1/3
        let expected = Polynomial::from_real(&[1.0 + 2.0 / 27.0, -1.0 / 3.0, 0.0, 1.0]).unwrap();
        for k in 0..4 {
            assert!((b.coeff(k) - expected.coeff(k)).norm() < 1e-14, "coefficient {k}");
        }
    }

    #[test]
    fn scale_action_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.scale_action(1.0).unwrap(), p);
        assert_eq!(p.scale_action(2.0).unwrap(), Polynomial::from_real(&[4.0, 0.0, 1.0]).unwrap());
        for t in [0.25, 3.0, 17.0] {
            assert_eq!(Polynomial::monomial(4).scale_action(t).unwrap(), Polynomial::monomial(4));
        }
        assert_eq!(p.scale_action(0.0), Err(PolyError::InvalidScale(0.0)));
        assert_eq!(p.scale_action(-1.0), Err(PolyError::InvalidScale(-1.0)));
    }

    #[test]
    fn normalize_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        let n = p.normalize().unwrap();
        assert!((n.scale - 1.0).abs() < 1e-14);
        let q = Polynomial::from_real(&[4.0, 0.0, 1.0]).unwrap();
        let n = q.normalize().unwrap();
        assert!((n.scale - 0.5).abs() < 1e-14);
        assert!((n.polynomial.coeff(0) - c(1.0, 0.0)).norm() < 1e-14);
        for d in 2..6 {
            assert_eq!(Polynomial::monomial(d).normalize(), Err(PolyError::NotNormalizable));
        }
        let r = Polynomial::from_roots(&[c(0.5, 0.25); 3]);
        assert_eq!(r.normalize(), Err(PolyError::NotNormalizable));
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let p = fig1();
        let s = c(0.3, -0.7);
        let q = p.taylor_shift(s);
        for z in [c(0.1, 0.2), c(-0.5, 0.9), c(1.1, -0.3)] {
            let a = q.evaluate(z);
            let b = p.evaluate(z + s);
            assert!((a - b).norm() <= 1e-10 * (1.0 + b.norm()));
        }
    }

    #[test]
    fn display_round_trips_text_format() {
        let p = fig1();
        assert_eq!(p.to_string(), "3+2i,1,5,-1,1,0,0,-6,0,0,0,0,0,1");
        let q = Polynomial::new(vec![c(0.5, -0.25), c(0.0, 3.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(q.to_string(), "0.5-0.25i,3i,1");
        assert_eq!(q.to_string().parse::<Polynomial>().unwrap(), q);
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(
            Polynomial::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)]),
            Err(PolyError::NonFinite { index: 1 })
        );
    }
}
