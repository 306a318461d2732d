//! Lower and upper incomplete gamma functions γ(a, z), Γ(a, z) for complex
//! `a` and real `z > 0`.
//!
//! Three evaluation routes:
//!
//! * power series for γ(a, z) (converges for all `z`, but its terms grow
//!   until `n ≈ z`);
//! * Legendre continued fraction for Γ(a, z) (modified Lentz), fast once
//!   `z` exceeds `|a|` and valid at the poles of Γ(a);
//! * the difference Γ(a) − γ(a, z), accurate whenever the upper tail is not
//!   tiny compared with Γ(a).
//!
//! [`lower_gamma`] and [`upper_gamma`] pick a route; the `*_series` /
//! `*_continued_fraction` functions force one, which is what the additivity
//! check relies on.

use num_complex::Complex;

use crate::complex::ensure_finite;
use crate::error::{Error, Result};
use crate::gamma::{gamma, near_pole, POLE_GUARD};
use crate::scalar::Real;
use crate::settings::{EvalResult, EvalSettings, Method};

/// Above `|a| + CF_MARGIN` the continued fraction is used for Γ(a, z).
const CF_MARGIN: f64 = 10.0;
/// Relative size of Γ(a, z) below which the difference route is abandoned.
const CANCELLATION_RATIO: f64 = 1e-6;
/// Distance to a pole of Γ(a) inside which only the continued fraction is
/// trusted for Γ(a, z).
const POLE_AVOIDANCE: f64 = 0.25;
/// The series prefactor e^{-z} z^a underflows beyond this.
const SERIES_Z_LIMIT: f64 = 600.0;

fn check_args<T: Real>(op: &'static str, a: Complex<T>, z: T) -> Result<()> {
    ensure_finite(op, a)?;
    if !z.is_finite() || z < T::zero() {
        return Err(Error::domain(op, format!("z must be a finite non-negative real, got {z}")));
    }
    Ok(())
}

fn reject_pole<T: Real>(op: &'static str, a: Complex<T>) -> Result<()> {
    if near_pole(a, T::lit(POLE_GUARD)) {
        return Err(Error::domain(
            op,
            format!(
                "a = {}{:+}i is within {POLE_GUARD:e} of the pole at {}",
                a.re,
                a.im,
                a.re.round()
            ),
        ));
    }
    Ok(())
}

/// `z^a e^{-z}` without intermediate overflow.
fn prefactor<T: Real>(a: Complex<T>, z: T) -> Complex<T> {
    let lz = z.ln();
    Complex::from_polar((a.re * lz - z).exp(), a.im * lz)
}

fn convergence_error<T: Real>(op: &'static str, terms: usize, partial: Complex<T>) -> Error {
    Error::Convergence {
        op,
        terms,
        partial_re: partial.re.approx_f64(),
        partial_im: partial.im.approx_f64(),
    }
}

/// γ(a, z) by its power series, `Σ z^{a+n} e^{-z} / (a(a+1)…(a+n))`.
///
/// Summation stops once a term falls below `rel_tol · |sum|` *and* `n > z`;
/// before that point the terms may still be growing.
pub fn lower_gamma_series<T: Real>(
    a: Complex<T>,
    z: T,
    settings: &EvalSettings,
) -> Result<EvalResult<T>> {
    const OP: &str = "lower_gamma";
    check_args(OP, a, z)?;
    reject_pole(OP, a)?;
    if z.is_zero() {
        if a.re > T::zero() {
            return Ok(EvalResult::new(Complex::new(T::zero(), T::zero()), T::zero(), 0, Method::Series));
        }
        return Err(Error::domain(OP, "γ(a, 0) diverges for Re a ≤ 0"));
    }
    if z > T::lit(SERIES_Z_LIMIT) {
        return Err(Error::domain(
            OP,
            format!("power series prefactor underflows for z = {z} > {SERIES_Z_LIMIT}"),
        ));
    }
    let tol = settings.tol::<T>().max(T::epsilon() * T::lit(2.0));
    let one = T::one();
    let mut term = Complex::new(one, T::zero()) / a;
    let mut sum = term;
    let mut n = 0usize;
    loop {
        n += 1;
        let nn = T::count(n);
        term = term * z / (a + nn);
        sum = sum + term;
        let past_peak = nn > z && nn + one + a.re > z;
        if past_peak && term.norm() <= tol * sum.norm() {
            // Remaining terms shrink at least geometrically with ratio r.
            let r = z / (a + nn + one).norm();
            let tail = term.norm() * r / (one - r);
            let pre = prefactor(a, z);
            let value = pre * sum;
            let est = tail * pre.norm() + T::epsilon() * T::lit(4.0) * value.norm();
            return Ok(EvalResult::new(ensure_finite(OP, value)?, est, n + 1, Method::Series));
        }
        if n + 1 >= settings.max_terms {
            return Err(convergence_error(OP, n + 1, prefactor(a, z) * sum));
        }
    }
}

/// Γ(a, z) by the Legendre continued fraction
/// `e^{-z} z^a / (z+1-a- 1(1-a)/(z+3-a- 2(2-a)/(z+5-a-…)))`.
///
/// Valid for every complex `a`, including the poles of Γ(a); convergence is
/// fast for `z ≳ |a|` and slows down as `z → 0`.
pub fn upper_gamma_continued_fraction<T: Real>(
    a: Complex<T>,
    z: T,
    settings: &EvalSettings,
) -> Result<EvalResult<T>> {
    const OP: &str = "upper_gamma";
    check_args(OP, a, z)?;
    if z.is_zero() {
        return Err(Error::domain(OP, "continued fraction requires z > 0"));
    }
    let tol = settings.tol::<T>().max(T::epsilon() * T::lit(2.0));
    // Lentz guard; its square must stay representable for complex division.
    let tiny = T::min_positive_value().sqrt() * T::lit(1e3);
    let guard = |v: Complex<T>| {
        if v.norm() < tiny {
            Complex::new(tiny, T::zero())
        } else {
            v
        }
    };
    let one = Complex::new(T::one(), T::zero());
    let two = T::lit(2.0);
    // Modified Lentz: f = b0 + a1/(b1 + a2/(b2 + …)), Γ(a, z) = z^a e^{-z} / f.
    let mut b = one * (z + T::one()) - a;
    let mut f = guard(b);
    let mut c = f;
    let mut d = Complex::new(T::zero(), T::zero());
    let mut i = 1usize;
    loop {
        let ii = T::count(i);
        // a_i = -i (i - a)
        let an = (a - ii) * ii;
        b = b + two;
        d = one / guard(b + an * d);
        c = guard(b + an / c);
        let delta = c * d;
        f = f * delta;
        let change = (delta - one).norm();
        if change <= tol {
            let value = prefactor(a, z) / f;
            let est = value.norm() * (change + T::epsilon() * T::lit(4.0) * ii.sqrt());
            return Ok(EvalResult::new(
                ensure_finite(OP, value)?,
                est,
                i + 1,
                Method::ContinuedFraction,
            ));
        }
        i += 1;
        if i >= settings.max_terms {
            return Err(convergence_error(OP, i, prefactor(a, z) / f));
        }
    }
}

/// Γ(a, z) as Γ(a) − γ(a, z) with the series for γ.
pub fn upper_gamma_difference<T: Real>(
    a: Complex<T>,
    z: T,
    settings: &EvalSettings,
) -> Result<EvalResult<T>> {
    let lower = lower_gamma_series(a, z, settings)?;
    let full = gamma(a)?;
    Ok(difference_result(full, lower))
}

fn difference_result<T: Real>(full: Complex<T>, lower: EvalResult<T>) -> EvalResult<T> {
    let value = full - lower.value;
    let est = lower.est_error + T::epsilon() * T::lit(64.0) * (full.norm() + lower.value.norm());
    EvalResult::new(value, est, lower.terms_used, Method::Difference)
}

/// Γ(a, z), choosing between the difference Γ(a) − γ(a, z) and the
/// continued fraction.
///
/// The continued fraction is used when `z > |a| + 10`, when `a` lies within
/// 0.25 of a pole of Γ(a), or when a cheap series pre-estimate shows
/// `|Γ(a, z)| < 1e-6 |Γ(a)|` (the difference would cancel). Otherwise the
/// difference route is taken.
pub fn upper_gamma<T: Real>(a: Complex<T>, z: T, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "upper_gamma";
    check_args(OP, a, z)?;
    if z.is_zero() {
        return Err(Error::domain(OP, "z must be positive"));
    }
    if z > a.norm() + T::lit(CF_MARGIN) || near_pole(a, T::lit(POLE_AVOIDANCE)) {
        return upper_gamma_continued_fraction(a, z, settings);
    }
    let lower = lower_gamma_series(a, z, settings)?;
    let full = gamma(a)?;
    if (full - lower.value).norm() < T::lit(CANCELLATION_RATIO) * full.norm() {
        return upper_gamma_continued_fraction(a, z, settings);
    }
    Ok(difference_result(full, lower))
}

/// γ(a, z). The power series is used unless `z > |a| + 10`, where the
/// series prefactor and term growth make Γ(a) − Γ(a, z) (continued fraction)
/// the accurate route.
pub fn lower_gamma<T: Real>(a: Complex<T>, z: T, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "lower_gamma";
    check_args(OP, a, z)?;
    reject_pole(OP, a)?;
    if z > a.norm() + T::lit(CF_MARGIN) {
        let upper = upper_gamma_continued_fraction(a, z, settings)?;
        let full = gamma(a)?;
        let value = full - upper.value;
        let est = upper.est_error + T::epsilon() * T::lit(64.0) * (full.norm() + upper.value.norm());
        return Ok(EvalResult::new(value, est, upper.terms_used, Method::Difference));
    }
    lower_gamma_series(a, z, settings)
}

/// Relative residual `|γ(a,z) + Γ(a,z) − Γ(a)| / |Γ(a)|` with γ from the
/// power series and Γ(a, z) from the continued fraction.
pub fn check_additivity<T: Real>(a: Complex<T>, z: T, settings: &EvalSettings) -> Result<T> {
    let lower = lower_gamma_series(a, z, settings)?;
    let upper = upper_gamma_continued_fraction(a, z, settings)?;
    let full = gamma(a)?;
    Ok((lower.value + upper.value - full).norm() / full.norm())
}
