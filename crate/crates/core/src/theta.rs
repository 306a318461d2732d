//! The alternating theta kernel ϕ(x) and the three theta series at z = ix.
//!
//! ϕ(x) = φ(x) − φ(x/4) with φ(x) = Σ_{n≥1} (−1)^{n+1} e^{−πn²x}. Grouping the
//! exponents by residue mod 4 gives ϕ(x) = Σ_m T_m(x), which converges fast for
//! x ≥ 1; below 1 the reflection ϕ(x) = ϕ(1/x)·√(1/x) is used.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::settings::{EvalResult, EvalSettings, Method};

/// Exponents of the m-th quartet: π(4m + k)²/4 for k = 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuartetCoefficients<T> {
    pub m: usize,
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> QuartetCoefficients<T> {
    pub fn new(m: usize) -> Self {
        let q = |k: usize| {
            let n = T::count(4 * m + k);
            T::PI() * n * n / T::lit(4.0)
        };
        QuartetCoefficients {
            m,
            a: q(1),
            b: q(2),
            c: q(3),
        }
    }
}

fn check_x<T: Real>(op: &'static str, x: T) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("x must be positive and finite, got {x}")))
    }
}

fn conv_error<T: Real>(op: &'static str, terms: usize, partial: T) -> Error {
    Error::Convergence {
        op,
        terms,
        partial_re: partial.approx_f64(),
        partial_im: 0.0,
    }
}

fn floor<T: Real>() -> T {
    T::lit(1e-300).max(T::min_positive_value())
}

/// Σ_{n≥1} (−1)^{n+1} e^{−πn²x}.
pub fn phi_series<T: Real>(x: T, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "phi_series";
    check_x(OP, x)?;
    let tol = settings.tol::<T>();
    let mut sum = T::zero();
    for n in 1..=settings.max_terms {
        let nn = T::count(n);
        let term = (-T::PI() * nn * nn * x).exp();
        sum = if n % 2 == 1 { sum + term } else { sum - term };
        let next = T::count(n + 1);
        if (-T::PI() * next * next * x).exp() < tol * sum.abs().max(floor()) {
            return Ok(sum);
        }
    }
    Err(conv_error(OP, settings.max_terms, sum))
}

/// T_m(x) = −e^{−A_m x} + 2e^{−B_m x} − e^{−C_m x}.
pub fn quartet_term<T: Real>(m: usize, x: T) -> T {
    let q = QuartetCoefficients::<T>::new(m);
    -(-q.a * x).exp() + T::lit(2.0) * (-q.b * x).exp() - (-q.c * x).exp()
}

/// Σ_m T_m(x) for any x > 0, without reflection. Returns (sum, terms).
fn quartet_sum<T: Real>(op: &'static str, x: T, settings: &EvalSettings) -> Result<(T, usize)> {
    let tol = settings.tol::<T>();
    let mut sum = T::zero();
    for m in 0..settings.max_terms {
        let t = quartet_term(m, x);
        sum = sum + t;
        if m > 0 && t.abs() <= tol * sum.abs().max(floor()) {
            return Ok((sum, m + 1));
        }
    }
    Err(conv_error(op, settings.max_terms, sum))
}

/// ϕ(x) by the quartet sum at x itself, whatever x is.
pub fn varphi_direct<T: Real>(x: T, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "varphi_direct";
    check_x(OP, x)?;
    quartet_sum(OP, x, settings).map(|(v, _)| v)
}

/// ϕ(x) with method and term count: quartet sum for x ≥ 1, reflection below.
pub fn varphi_result<T: Real>(x: T, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "varphi";
    check_x(OP, x)?;
    let (v, terms, method) = if x >= T::one() {
        let (v, n) = quartet_sum(OP, x, settings)?;
        (v, n, Method::Quartet)
    } else {
        let y = x.recip();
        let (v, n) = quartet_sum(OP, y, settings)?;
        (v * y.sqrt(), n, Method::Reflection)
    };
    let est = v.abs() * (settings.tol::<T>() + T::epsilon() * T::count(terms + 4));
    Ok(EvalResult::new(Complex::new(v, T::zero()), est, terms, method))
}

/// ϕ(x).
pub fn varphi<T: Real>(x: T, settings: &EvalSettings) -> Result<T> {
    varphi_result(x, settings).map(|r| r.value.re)
}

/// ln(−ϕ(x)), finite wherever ϕ(x) < 0, including where ϕ(x) itself
/// underflows (x ≳ 950 or x ≲ 1/950 in f64).
///
/// The quartet sum is scaled by e^{A₀y} (y = max(x, 1/x)) before summing, so
/// the sign of the scaled sum is the sign of ϕ.
pub fn ln_neg_varphi<T: Real>(x: T, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "ln_neg_varphi";
    check_x(OP, x)?;
    let (y, log_factor) = if x >= T::one() {
        (x, T::zero())
    } else {
        (x.recip(), -x.ln() / T::lit(2.0))
    };
    let a0 = QuartetCoefficients::<T>::new(0).a;
    let tol = settings.tol::<T>();
    let mut scaled = T::zero();
    for m in 0..settings.max_terms {
        let q = QuartetCoefficients::<T>::new(m);
        let t = -(-(q.a - a0) * y).exp() + T::lit(2.0) * (-(q.b - a0) * y).exp()
            - (-(q.c - a0) * y).exp();
        scaled = scaled + t;
        if m > 0 && t.abs() <= tol * scaled.abs() {
            return Ok((-scaled).ln() - a0 * y + log_factor);
        }
    }
    Err(conv_error(OP, settings.max_terms, scaled))
}

/// The three theta series at z = ix, returned as (ϑ₃, ϑ₄, ϑ₂):
/// Σ_{n∈ℤ} e^{−πn²x}, Σ_{n∈ℤ} (−1)ⁿ e^{−πn²x}, 2 Σ_{n≥0} e^{−π(n+½)²x}.
pub fn theta_trio<T: Real>(x: T, settings: &EvalSettings) -> Result<(T, T, T)> {
    const OP: &str = "theta_trio";
    check_x(OP, x)?;
    let tol = settings.tol::<T>();
    let two = T::lit(2.0);
    let mut t3 = T::one();
    let mut t4 = T::one();
    let mut t2 = T::zero();
    for n in 0..settings.max_terms {
        let half = T::count(n) + T::lit(0.5);
        let e2 = two * (-T::PI() * half * half * x).exp();
        t2 = t2 + e2;
        let mut e3 = T::zero();
        if n > 0 {
            let nn = T::count(n);
            e3 = two * (-T::PI() * nn * nn * x).exp();
            t3 = t3 + e3;
            t4 = if n % 2 == 1 { t4 - e3 } else { t4 + e3 };
        }
        if n > 0 && e3 <= tol * t4.abs().max(floor()) && e2 <= tol * t2.max(floor()) {
            return Ok((t3, t4, t2));
        }
    }
    Err(conv_error(OP, settings.max_terms, t3))
}

/// Central difference (ϕ(x+h) − ϕ(x−h)) / 2h.
pub fn varphi_derivative<T: Real>(x: T, h: T, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "varphi_derivative";
    check_x(OP, x)?;
    if !(h > T::zero() && h < x / T::lit(2.0)) {
        return Err(Error::domain(OP, format!("step h = {h} must lie in (0, x/2)")));
    }
    let up = varphi(x + h, settings)?;
    let down = varphi(x - h, settings)?;
    Ok((up - down) / (T::lit(2.0) * h))
}

/// Location and value of the minimum of ϕ, by golden-section search on [0.5, 1].
pub fn varphi_minimum<T: Real>(settings: &EvalSettings) -> Result<(T, T)> {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let (mut lo, mut hi) = (T::lit(0.5), T::one());
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = varphi(x1, settings)?;
    let mut f2 = varphi(x2, settings)?;
    // The minimum is quadratic, so x is only resolvable to ~√ε.
    let x_tol = T::epsilon().sqrt();
    while hi - lo > x_tol {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = varphi(x1, settings)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = varphi(x2, settings)?;
        }
    }
    let x = (lo + hi) / T::lit(2.0);
    Ok((x, varphi(x, settings)?))
}
