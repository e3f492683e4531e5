//! The `4d` asymptotic directions `e^{kπi/2d}` and their colour conventions.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polynomial::Complex;

/// Edge colour: `R` for `P⁻¹(ℝ)`, `I` for `P⁻¹(iℝ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    R,
    I,
}

impl Colour {
    pub fn letter(self) -> char {
        match self {
            Colour::R => 'R',
            Colour::I => 'I',
        }
    }

    pub fn other(self) -> Colour {
        match self {
            Colour::R => Colour::I,
            Colour::I => Colour::R,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Region colour: the quadrant of `P(z)`. `A` = (+,+), then counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quadrant {
    A,
    B,
    C,
    D,
}

impl Quadrant {
    pub fn from_index(k: usize) -> Quadrant {
        match k % 4 {
            0 => Quadrant::A,
            1 => Quadrant::B,
            2 => Quadrant::C,
            _ => Quadrant::D,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Colour of the sector between rays `k` and `k+1`.
    pub fn of_sector(k: usize) -> Quadrant {
        Quadrant::from_index(k)
    }

    pub fn letter(self) -> char {
        (b'A' + self as u8) as char
    }
}

/// Ray index `k` in `[0, 4d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RayIndex(pub usize);

impl RayIndex {
    /// Even rays carry `R` ends, odd rays `I` ends.
    pub fn colour(self) -> Colour {
        if self.0 % 2 == 0 {
            Colour::R
        } else {
            Colour::I
        }
    }

    /// `k ≡ 0, 1 (mod 4)` are outgoing ends, `k ≡ 2, 3` ingoing.
    pub fn is_outgoing(self) -> bool {
        self.0 % 4 < 2
    }

    pub fn direction(self, degree: usize) -> Complex {
        Complex::from_polar(1.0, self.0 as f64 * PI / (2 * degree) as f64)
    }
}

impl fmt::Display for RayIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fraction of the half-gap `π/2d` within which a point is attributed to a ray.
pub const RAY_ACCEPTANCE: f64 = 0.45;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum RayError {
    #[error("point {point} lies between rays (angular offset {offset:.3} of the gap)")]
    AmbiguousRay { point: Complex, offset: f64 },
    #[error("degree must be positive")]
    ZeroDegree,
}

/// Nearest ray to `arg z`; fails unless the angular distance is below
/// `RAY_ACCEPTANCE · π/2d`.
pub fn ray_of_point(z: Complex, degree: usize) -> Result<RayIndex, RayError> {
    if degree == 0 {
        return Err(RayError::ZeroDegree);
    }
    let gap = PI / (2 * degree) as f64;
    let n = 4 * degree;
    let mut arg = z.arg();
    if arg < 0.0 {
        arg += 2.0 * PI;
    }
    let x = arg / gap;
    let k = x.round();
    let offset = (x - k).abs();
    if offset >= RAY_ACCEPTANCE {
        return Err(RayError::AmbiguousRay { point: z, offset });
    }
    Ok(RayIndex(k as usize % n))
}

/// True when no two chords `(a, b)` interleave on a circle.
pub fn chords_noncrossing(chords: &[(usize, usize)]) -> bool {
    let norm: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for (i, &(a, b)) in norm.iter().enumerate() {
        for &(c, e) in &norm[i + 1..] {
            let c_in = a < c && c < b;
            let e_in = a < e && e < b;
            if c_in != e_in && c != a && c != b && e != a && e != b {
                return false;
            }
        }
    }
    true
}
