//! Critical data and the numeric stratum classifier.

use serde::Serialize;

use super::{roots, Complex, PolyError, Polynomial};

/// Default relative tolerance, measured against `1 + max |c_i|`.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub location: Complex,
    /// Multiplicity as a root of `P'`.
    pub multiplicity: usize,
    /// `P(location)`.
    pub value: Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalData {
    pub points: Vec<CriticalPoint>,
}

impl CriticalData {
    pub fn critical_values(&self) -> impl Iterator<Item = Complex> + '_ {
        self.points.iter().map(|p| p.value)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }
}

/// Where a polynomial sits in the stratification by critical values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StratumClass {
    pub codimension: usize,
    /// Critical points whose value is a non-zero real number.
    pub on_real_wall_count: usize,
    /// Critical points whose value is a non-zero imaginary number.
    pub on_imag_wall_count: usize,
    /// Some critical value is 0, i.e. `P` has a multiple root.
    pub in_discriminant: bool,
    pub biregular: bool,
}

pub fn critical_data(p: &Polynomial, tol: f64) -> Result<CriticalData, PolyError> {
    let d = p.degree();
    if d < 2 {
        return Err(PolyError::DegreeTooLow { degree: d, required: 2 });
    }
    let dp = p.derivative()?;
    let points = roots(&dp, tol)?
        .into_iter()
        .map(|r| CriticalPoint {
            location: r.value,
            multiplicity: r.multiplicity,
            value: p.evaluate(r.value),
        })
        .collect();
    Ok(CriticalData { points })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Placement {
    Zero,
    RealAxis,
    ImagAxis,
    Off,
}

fn place(v: Complex, threshold: f64) -> Placement {
    if v.norm() <= threshold {
        Placement::Zero
    } else if v.im.abs() <= threshold {
        Placement::RealAxis
    } else if v.re.abs() <= threshold {
        Placement::ImagAxis
    } else {
        Placement::Off
    }
}

fn stratum(points: &[CriticalPoint], threshold: f64) -> StratumClass {
    let mut class = StratumClass {
        codimension: 0,
        on_real_wall_count: 0,
        on_imag_wall_count: 0,
        in_discriminant: false,
        biregular: true,
    };
    for cp in points {
        let mu = cp.multiplicity;
        match place(cp.value, threshold) {
            Placement::Zero => {
                class.in_discriminant = true;
                class.codimension += 2 * mu;
            }
            Placement::RealAxis => {
                class.on_real_wall_count += 1;
                class.codimension += 2 * mu - 1;
            }
            Placement::ImagAxis => {
                class.on_imag_wall_count += 1;
                class.codimension += 2 * mu - 1;
            }
            Placement::Off => {}
        }
    }
    class.biregular = class.codimension == 0;
    class
}

/// Classifies a monic polynomial by the axis membership of its critical
/// values. Fails with `NearWallAmbiguous` when the verdict changes between
/// `tol/10` and `10 tol`.
pub fn classify(p: &Polynomial, tol: f64) -> Result<StratumClass, PolyError> {
    if !p.is_monic() {
        return Err(PolyError::NotMonic(p.leading()));
    }
    let d = p.degree();
    if d == 0 {
        return Err(PolyError::DegreeTooLow { degree: 0, required: 1 });
    }
    if d == 1 {
        return Ok(stratum(&[], 0.0));
    }
    let crit = critical_data(p, tol)?;
    let scale = p.coefficient_scale();
    let tight = stratum(&crit.points, tol / 10.0 * scale);
    let nominal = stratum(&crit.points, tol * scale);
    let loose = stratum(&crit.points, tol * 10.0 * scale);
    if tight != nominal || loose != nominal {
        let value = crit
            .points
            .iter()
            .map(|cp| cp.value)
            .find(|&v| place(v, tol / 10.0 * scale) != place(v, tol * 10.0 * scale))
            .unwrap_or_default();
        return Err(PolyError::NearWallAmbiguous { value });
    }
    Ok(nominal)
}
