//! Complete gamma function for complex arguments.
//!
//! Lanczos approximation with Godfrey's `g = 607/128`, 15-term coefficient
//! set, evaluated in log space so that large imaginary parts neither overflow
//! nor underflow before the final exponential. The left half-plane goes
//! through the reflection formula.

use num_complex::Complex;

use crate::complex::{ensure_finite, sin_pi};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Inputs closer than this to a pole are rejected.
pub const POLE_GUARD: f64 = 1e-9;

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

/// Distance from `z` to the nearest non-positive integer, together with that
/// integer. Returns `None` when `Re z` rounds to a positive integer.
pub(crate) fn nearest_pole<T: Real>(z: Complex<T>) -> Option<(i64, T)> {
    let n = z.re.round();
    if n > T::zero() {
        return None;
    }
    let d = Complex::new(z.re - n, z.im).norm();
    Some((n.to_i64().unwrap_or(i64::MIN), d))
}

/// Returns `true` if `z` is within `radius` of `0, -1, -2, …`.
pub(crate) fn near_pole<T: Real>(z: Complex<T>, radius: T) -> bool {
    matches!(nearest_pole(z), Some((_, d)) if d < radius)
}

/// Γ(z) for complex `z`.
///
/// Relative error stays below 1e-12 for `|z| ≤ 50`, `|Im z| ≤ 50` in `f64`.
/// Arguments within [`POLE_GUARD`] of a non-positive integer are rejected
/// with a domain error naming the pole.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    ensure_finite("gamma", z)?;
    if let Some((n, d)) = nearest_pole(z) {
        if d < T::lit(POLE_GUARD) {
            return Err(Error::domain(
                "gamma",
                format!("argument {}{:+}i is within {POLE_GUARD:e} of the pole at {n}", z.re, z.im),
            ));
        }
    }
    let value = if z.re < T::lit(0.5) {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let one = Complex::new(T::one(), T::zero());
        let denom = sin_pi(z) * ln_gamma_right(one - z).exp();
        Complex::new(T::PI(), T::zero()) / denom
    } else {
        ln_gamma_right(z).exp()
    };
    ensure_finite("gamma", value)
}

/// A branch of ln Γ(z) for `Re z ≥ 1/2`; only its exponential is meaningful
/// across the negative real axis of the Lanczos sum.
fn ln_gamma_right<T: Real>(z: Complex<T>) -> Complex<T> {
    let zm1 = z - T::one();
    let mut sum = Complex::new(T::lit(LANCZOS_COEF[0]), T::zero());
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum = sum + Complex::new(T::lit(c), T::zero()) / (zm1 + T::count(k));
    }
    let half = T::lit(0.5);
    let t = zm1 + T::lit(LANCZOS_G) + half;
    let ln_sqrt_2pi = half * (T::TAU()).ln();
    (zm1 + half) * t.ln() - t + sum.ln() + ln_sqrt_2pi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_pole_classification() {
        let c = |re: f64, im: f64| Complex::new(re, im);
        assert_eq!(nearest_pole(c(2.2, 0.0)), None);
        assert_eq!(nearest_pole(c(-2.2, 0.0)).map(|p| p.0), Some(-2));
        assert!(near_pole(c(-1.0, 1e-4), 1e-3));
        assert!(!near_pole(c(-1.5, 0.0), 0.25));
    }
}
