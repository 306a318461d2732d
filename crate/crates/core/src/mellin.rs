//! ξ_a(s) as a Mellin integral of the kernel, by brute-force quadrature.
//!
//! ξ_a(s) = ∫₀^∞ ϕ(x) x^{s/2−1} dx. Splitting at x = c and reflecting the
//! (0, c) piece gives
//!
//! ξ_a(s) = ∫_c^∞ ϕ(x) x^{s/2} dx/x + ∫_{1/c}^∞ ϕ(x) x^{(1−s)/2} dx/x,
//!
//! which converges for every s. All integrals are taken in v = ln x, where the
//! kernel decays like exp(−π e^{|v|}/4) and a finite window suffices.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, Quadrature, QuadratureSpec};
use crate::scalar::Real;
use crate::settings::{EvalResult, EvalSettings, Method};
use crate::theta::varphi;
use crate::zeta::SPoint;

/// Smallest window edge V ≥ ln 60 (in steps of ¼) with
/// exp(−π e^V / 4 + p V) below ε·1e-6.
fn window<T: Real>(p: T) -> T {
    let target = (T::epsilon() * T::lit(1e-6)).ln();
    let mut v = T::lit(60.0).ln();
    while -T::PI() * v.exp() / T::lit(4.0) + p * v > target {
        v = v + T::lit(0.25);
    }
    v
}

/// Bound on the discarded tail beyond the window edge.
fn tail_bound<T: Real>(v: T, p: T) -> T {
    (-T::PI() * v.exp() / T::lit(4.0) + p * v).exp() * T::lit(4.0) / T::PI()
}

fn finish<T: Real>(op: &'static str, parts: &[Quadrature<T>], tail: T) -> Result<EvalResult<T>> {
    let value = parts.iter().fold(Complex::new(T::zero(), T::zero()), |a, q| a + q.value);
    let est = parts.iter().fold(tail, |a, q| a + q.est_error);
    let evaluations = parts.iter().map(|q| q.evaluations).sum();
    let finite = value.re.is_finite() && value.im.is_finite() && est.is_finite();
    // The refinement difference is the only error signal; a large one means
    // the node count does not resolve the integrand.
    if !finite || est > T::lit(1e-6) * value.norm().max(T::one()) {
        return Err(Error::Convergence {
            op,
            terms: evaluations,
            partial_re: value.re.approx_f64(),
            partial_im: value.im.approx_f64(),
        });
    }
    Ok(EvalResult::new(value, est, evaluations, Method::Quadrature))
}

fn exponent_weight<T: Real>(s: Complex<T>) -> T {
    let half = T::lit(0.5);
    (s.re * half).abs().max(((T::one() - s.re) * half).abs())
}

/// ξ_a(s) from the split Mellin integral, split at x = `spec.split_at`.
pub fn mellin_xi_a<T: Real>(p: SPoint<T>, spec: &QuadratureSpec, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "mellin_xi_a";
    let s = p.s;
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain(OP, format!("s must be finite, got {s}")));
    }
    let half = T::lit(0.5);
    let w = exponent_weight(s);
    let edge = window(w);
    let ln_c = T::lit(spec.split_at).ln();
    if ln_c.abs() >= edge {
        return Err(Error::domain(OP, format!("split_at = {} lies outside the integration window", spec.split_at)));
    }
    let piece = |lo: T, a: Complex<T>| {
        integrate(spec, lo, edge, |v: T| {
            let k = varphi(v.exp(), settings)?;
            Ok((a * v).exp() * k)
        })
    };
    let left = s * half;
    let right = (Complex::new(T::one(), T::zero()) - s) * half;
    let parts = if ln_c == T::zero() {
        vec![integrate(spec, T::zero(), edge, |v: T| {
            let k = varphi(v.exp(), settings)?;
            Ok(((left * v).exp() + (right * v).exp()) * k)
        })?]
    } else {
        vec![piece(ln_c, left)?, piece(-ln_c, right)?]
    };
    finish(OP, &parts, T::lit(2.0) * tail_bound(edge, w))
}

/// ξ_a(s) = ∫₀¹ ϕ(x) [x^{s/2} + x^{(1−s)/2}] dx/x for 0 < Re s < 1, in
/// u = −ln x, with ϕ taken through the reflection route.
pub fn mellin_xi_a_unit_interval<T: Real>(
    p: SPoint<T>,
    spec: &QuadratureSpec,
    settings: &EvalSettings,
) -> Result<EvalResult<T>> {
    const OP: &str = "mellin_xi_a_unit_interval";
    let s = p.s;
    if !(s.re > T::zero() && s.re < T::one() && s.im.is_finite()) {
        return Err(Error::domain(OP, format!("requires 0 < Re s < 1, got s = {s}")));
    }
    let half = T::lit(0.5);
    let w = exponent_weight(s) + half;
    let edge = window(w);
    let left = -s * half;
    let right = -(Complex::new(T::one(), T::zero()) - s) * half;
    let q = integrate(spec, T::zero(), edge, |u: T| {
        let k = varphi((-u).exp(), settings)?;
        Ok(((left * u).exp() + (right * u).exp()) * k)
    })?;
    finish(OP, &[q], T::lit(2.0) * tail_bound(edge, w))
}

/// ∫₀^∞ ϕ(x) x^{c−1} dx for real c, over the whole line in v = ln x.
/// Equal to ξ_a(2c); converges for every c.
pub fn kernel_moment<T: Real>(c: T, spec: &QuadratureSpec, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "kernel_moment";
    if !c.is_finite() {
        return Err(Error::domain(OP, format!("exponent must be finite, got {c}")));
    }
    let w = c.abs().max((T::lit(0.5) - c).abs());
    let edge = window(w);
    let q = integrate(spec, -edge, edge, |v: T| {
        Ok(Complex::new(varphi(v.exp(), settings)? * (c * v).exp(), T::zero()))
    })?;
    finish(OP, &[q], T::lit(2.0) * tail_bound(edge, w))
}

/// (∫₀^∞ ϕ dx/x, ∫₀^∞ ϕ dx/√x, ∫₀^∞ ϕ dx).
pub fn special_integrals<T: Real>(spec: &QuadratureSpec, settings: &EvalSettings) -> Result<(T, T, T)> {
    let m = |c: f64| kernel_moment(T::lit(c), spec, settings).map(|r| r.value.re);
    Ok((m(0.0)?, m(0.5)?, m(1.0)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_covers_sixty() {
        let v: f64 = window(0.5);
        assert!(v >= 60f64.ln());
        assert!(tail_bound(v, 0.5) < 1e-20);
        let wide: f64 = window(20.0);
        assert!(tail_bound(wide, 20.0) < 1e-20);
    }
}
