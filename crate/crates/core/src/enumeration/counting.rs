//! Exact counts: Catalan `D(d)`, Fuss-Catalan `Pict(d)` and wall counts.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)` by the multiplicative formula; every partial product is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `D(0..=d)` from `D(n+1) = Σ_{i=0}^{n} D(i) D(n-i)`.
pub fn catalan_sequence(d: usize) -> Vec<BigUint> {
    let mut seq = vec![BigUint::one()];
    for n in 0..d {
        let next = (0..=n).map(|i| &seq[i] * &seq[n - i]).sum();
        seq.push(next);
    }
    seq
}

/// Catalan number `D(d)`, the recurrence checked against `C(2d, d)/(d+1)`.
pub fn catalan_d(d: usize) -> BigUint {
    let rec = catalan_sequence(d).pop().expect("non-empty");
    let closed = binomial(2 * d as u64, d as u64) / (d as u64 + 1);
    assert_eq!(rec, closed, "Catalan recurrence disagrees with the closed form at d = {d}");
    rec
}

/// `Pict(0..=d)` from the four-fold convolution
/// `Pict(n+1) = Σ_{i+j+k+l=n} Pict(i) Pict(j) Pict(k) Pict(l)`,
/// evaluated as the square of the square.
pub fn pict_sequence(d: usize) -> Vec<BigUint> {
    let mut pict = vec![BigUint::one()];
    let mut square: Vec<BigUint> = Vec::new();
    for n in 0..d {
        // square[n] = Σ pict[i] pict[n-i] only needs pict[0..=n]
        square.push((0..=n).map(|i| &pict[i] * &pict[n - i]).sum());
        let next = (0..=n).map(|i| &square[i] * &square[n - i]).sum();
        pict.push(next);
    }
    pict
}

/// Number of bi-regular signatures of degree `d`, the recurrence checked
/// against `C(4d, d)/(3d+1)`.
pub fn pict_count(d: usize) -> BigUint {
    let rec = pict_sequence(d).pop().expect("non-empty");
    let closed = binomial(4 * d as u64, d as u64) / (3 * d as u64 + 1);
    assert_eq!(rec, closed, "Pict recurrence disagrees with the closed form at d = {d}");
    rec
}

/// Number of codimension-1 walls: `4(d-1)` for `d < 3`, otherwise
/// `2d Σ_{a=1}^{d-1} Pict(a) Pict(d-a)`.
pub fn wall_count(d: usize) -> BigUint {
    if d < 3 {
        return BigUint::from(4 * d.saturating_sub(1));
    }
    let pict = pict_sequence(d - 1);
    let sum: BigUint = (1..d).map(|a| &pict[a] * &pict[d - a]).sum();
    sum * (2 * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(40, 10), BigUint::from(847_660_528u64));
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn catalan_start() {
        assert_eq!(catalan_d(0), BigUint::one());
        assert_eq!(catalan_d(3), BigUint::from(5u32));
        assert_eq!(catalan_d(8), BigUint::from(1430u32));
    }

    #[test]
    fn pict_values() {
        assert_eq!(pict_count(0), BigUint::one());
        assert_eq!(pict_count(3), BigUint::from(22u32));
        assert_eq!(pict_count(10), BigUint::from(27_343_888u64));
        assert_eq!(pict_count(15), BigUint::from(1_156_393_243_320u64));
    }

    #[test]
    fn wall_values() {
        assert_eq!(wall_count(1), BigUint::zero());
        assert_eq!(wall_count(4), BigUint::from(480u32));
        assert_eq!(wall_count(10), BigUint::from(307_618_740u64));
    }
}
