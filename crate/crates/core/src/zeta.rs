//! η, ζ, ξ_a and ξ.
//!
//! The workhorse is the quartet sum
//! Q(s) = Σ_{m≥0} [(4m+1)^{−s} − 2(4m+2)^{−s} + (4m+3)^{−s}] = η(s)(1 − 2^{−s}),
//! summed directly for m < N and closed with an Euler–Maclaurin tail, which
//! continues it analytically to every s.

use num_complex::Complex;
use rayon::prelude::*;

use crate::complex::{ensure_finite, pow_pos, sin_pi};
use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::incomplete_gamma::{lower_gamma, upper_gamma};
use crate::scalar::Real;
use crate::settings::{EvalResult, EvalSettings, Method};
use crate::theta::QuartetCoefficients;

/// A point s, optionally tagged as s = 1/2 + it on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SPoint<T> {
    pub s: Complex<T>,
    pub t: Option<T>,
}

impl<T: Real> SPoint<T> {
    pub fn new(s: Complex<T>) -> Self {
        SPoint { s, t: None }
    }

    pub fn real(x: T) -> Self {
        Self::new(Complex::new(x, T::zero()))
    }

    /// s = 1/2 + it with Re s exactly 1/2.
    pub fn critical(t: T) -> Self {
        SPoint {
            s: Complex::new(T::lit(0.5), t),
            t: Some(t),
        }
    }

    /// The reflected point 1 − s.
    pub fn reflect(self) -> Self {
        SPoint {
            s: Complex::new(T::one(), T::zero()) - self.s,
            t: self.t.map(|t| -t),
        }
    }
}

impl<T: Real> From<Complex<T>> for SPoint<T> {
    fn from(s: Complex<T>) -> Self {
        SPoint::new(s)
    }
}

fn one<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

fn c<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// 2π / ln 2, the spacing of the zeros of 1 − 2^s along the imaginary axis.
pub fn extra_zero_spacing<T: Real>() -> T {
    T::TAU() / T::LN_2()
}

/// Distance from s to the nearest point re + 2kπi/ln2 (k ∈ ℤ), with that k.
fn lattice_distance<T: Real>(s: Complex<T>, re: T) -> (T, i64) {
    let spacing = extra_zero_spacing::<T>();
    let k = (s.im / spacing).round();
    let d = Complex::new(s.re - re, s.im - k * spacing).norm();
    (d, k.to_i64().unwrap_or(0))
}

fn describe_lattice_point(re: f64, k: i64) -> String {
    match (re == 0.0, k) {
        (true, 0) => "s = 0".to_string(),
        (false, 0) => format!("s = {re}"),
        (true, k) => format!("s = {k}·2πi/ln2"),
        (false, k) => format!("s = {re} + {k}·2πi/ln2"),
    }
}

// B_{2k} for k = 1..=15 as exact ratios.
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

const QUARTET_WEIGHTS: [(usize, f64); 3] = [(1, 1.0), (2, -2.0), (3, 1.0)];

/// Σ_{m≥start} [(4m+1)^{−s} − 2(4m+2)^{−s} + (4m+3)^{−s}].
///
/// Returns (value, error estimate, explicit terms). Explicit summation runs
/// to N = max(start, ⌈|s|⌉ + 10), where the Euler–Maclaurin corrections
/// decrease fast; the integral part uses (e^w − 1)/w so s = 1 is regular.
pub(crate) fn quartet_tail<T: Real>(
    op: &'static str,
    s: Complex<T>,
    start: usize,
    settings: &EvalSettings,
) -> Result<(Complex<T>, T, usize)> {
    let n_min = s.norm().ceil().to_usize().unwrap_or(usize::MAX).saturating_add(10);
    let n = start.max(n_min);
    if n - start > settings.max_terms {
        return Err(Error::Convergence {
            op,
            terms: settings.max_terms,
            partial_re: f64::NAN,
            partial_im: f64::NAN,
        });
    }
    let neg_s = -s;
    let mut direct = Complex::new(T::zero(), T::zero());
    for m in start..n {
        for (k, w) in QUARTET_WEIGHTS {
            direct = direct + pow_pos(T::count(4 * m + k), neg_s) * T::lit(w);
        }
    }

    let four = T::lit(4.0);
    let mut integral = Complex::new(T::zero(), T::zero());
    let mut half = Complex::new(T::zero(), T::zero());
    // (4N+c)^{−s}, the running derivative factor and 4/(4N+c) per column.
    let mut cols: Vec<(T, Complex<T>, T)> = Vec::with_capacity(3);
    for (k, w) in QUARTET_WEIGHTS {
        let x = T::count(4 * n + k);
        let l = x.ln();
        let base = pow_pos(x, neg_s);
        let w = T::lit(w);
        integral = integral - crate::complex::exprel((one::<T>() - s) * l) * (w * l) / four;
        half = half + base * w / T::lit(2.0);
        cols.push((w, base, four / x));
    }

    // Σ_k B_{2k}/(2k)! f^{(2k−1)}(N), with f^{(j)} = Σ_c w_c (−s)_j↓ 4^j (4N+c)^{−s−j}.
    let mut deriv: Vec<Complex<T>> = cols.iter().map(|&(w, b, _)| b * w).collect();
    let mut order = 0usize;
    let mut correction = Complex::new(T::zero(), T::zero());
    let mut factorial = T::one();
    let mut last = T::infinity();
    let mut est = T::zero();
    let partial = direct + integral + half;
    for (kk, &(num, den)) in BERNOULLI.iter().enumerate() {
        let target = 2 * kk + 1;
        while order < target {
            let j = T::count(order);
            for (d, &(_, _, g)) in deriv.iter_mut().zip(cols.iter()) {
                *d = *d * (neg_s - j) * g;
            }
            order += 1;
        }
        factorial = factorial * T::count(2 * kk + 1) * T::count(2 * kk + 2);
        let fj = deriv.iter().fold(Complex::new(T::zero(), T::zero()), |a, &d| a + d);
        let term = fj * (T::lit(num) / T::lit(den) / factorial);
        let mag = term.norm();
        if mag > last {
            // Asymptotic series has turned; stop before it grows.
            est = last;
            break;
        }
        correction = correction - term;
        last = mag;
        est = mag;
        if mag <= T::epsilon() * (partial + correction).norm() {
            break;
        }
    }
    let value = partial + correction;
    let rounding = T::epsilon() * T::count(n - start + 8) * direct.norm().max(value.norm());
    Ok((value, est + rounding, n - start))
}

/// The quartet sum Q(s) = η(s)(1 − 2^{−s}) for any s.
pub fn quartet_sum<T: Real>(s: Complex<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "quartet_sum";
    check_finite(OP, s)?;
    let (v, est, n) = quartet_tail(OP, s, 0, settings)?;
    Ok(EvalResult::new(ensure_finite(OP, v)?, est, n, Method::Quartet))
}

fn check_finite<T: Real>(op: &'static str, s: Complex<T>) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("s must be finite, got {s}")))
    }
}

/// η(s) through the quartet sum: Q(s) / (1 − 2^{−s}).
pub fn eta_quartet<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "eta_quartet";
    let s = p.s;
    check_finite(OP, s)?;
    let (d, k) = lattice_distance(s, T::zero());
    if d < T::lit(1e-8) {
        return Err(Error::domain(
            OP,
            format!("1 − 2^(−s) vanishes at {}", describe_lattice_point(0.0, k)),
        ));
    }
    let denom = one::<T>() - pow_pos(T::lit(2.0), -s);
    let (q, est, n) = quartet_tail(OP, s, 0, settings)?;
    let value = q / denom;
    let est = (est + T::epsilon() * q.norm()) / denom.norm();
    Ok(EvalResult::new(ensure_finite(OP, value)?, est, n, Method::Quartet))
}

/// η(s) by the alternating series Σ (−1)^{n+1} n^{−s}, accelerated with the
/// Chebyshev-weighted scheme of Cohen, Rodriguez Villegas and Zagier
/// (the Borwein coefficients d_k).
pub fn eta_alternating<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "eta_alternating";
    let s = p.s;
    check_finite(OP, s)?;
    let t = s.im.abs();
    let rate = (T::lit(3.0) + T::lit(8.0).sqrt()).ln();
    let tol = settings.tol::<T>();
    let need = ((T::lit(3.0) * (T::one() + T::lit(2.0) * t)).ln()
        + T::PI() * t / T::lit(2.0)
        + (-s.re).max(T::zero()) * T::lit(2.0)
        - tol.ln())
        / rate
        + T::lit(5.0);
    let n = need.ceil().to_usize().unwrap_or(usize::MAX);
    if n > settings.max_terms {
        return Err(Error::Convergence {
            op: OP,
            terms: settings.max_terms,
            partial_re: f64::NAN,
            partial_im: f64::NAN,
        });
    }
    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)
    let nn = T::count(n);
    let mut term = nn.recip();
    let mut acc = term;
    let mut d = Vec::with_capacity(n + 1);
    d.push(nn * acc);
    for i in 1..=n {
        let ii = T::count(i);
        term = term * (nn + ii - T::one()) * T::lit(4.0) * (nn - ii + T::one())
            / (T::lit(2.0) * ii * (T::lit(2.0) * ii - T::one()));
        acc = acc + term;
        d.push(nn * acc);
    }
    let dn = d[n];
    let mut sum = Complex::new(T::zero(), T::zero());
    for (k, &dk) in d.iter().take(n).enumerate() {
        let w = (dk - dn) / dn;
        let w = if k % 2 == 0 { w } else { -w };
        sum = sum + pow_pos(T::count(k + 1), -s) * w;
    }
    let value = -sum;
    // Truncation bound 3(1+2|t|)e^{π|t|/2} / (3+√8)^n plus rounding.
    let bound = (T::lit(3.0) * (T::one() + T::lit(2.0) * t)).ln() + T::PI() * t / T::lit(2.0)
        - nn * rate;
    let est = bound.exp() + T::epsilon() * nn;
    Ok(EvalResult::new(ensure_finite(OP, value)?, est, n, Method::Series))
}

/// η(s) for Re s ≤ 0 from η(1 − s) via
/// η(s) = (2^s − 2)/(1 − 2^s) · π^{s−1} Γ(1−s) sin(πs/2) η(1−s).
fn eta_functional<T: Real>(s: Complex<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "eta";
    let reflected = eta_quartet(SPoint::new(one::<T>() - s), settings)?;
    let factor = eta_reflection_factor(OP, s)?;
    let value = factor * reflected.value;
    let est = factor.norm() * reflected.est_error + T::lit(64.0) * T::epsilon() * value.norm();
    Ok(EvalResult::new(
        ensure_finite(OP, value)?,
        est,
        reflected.terms_used,
        Method::Reflection,
    ))
}

fn eta_reflection_factor<T: Real>(op: &'static str, s: Complex<T>) -> Result<Complex<T>> {
    let two = T::lit(2.0);
    let p2 = pow_pos(two, s);
    let denom = one::<T>() - p2;
    if denom.norm() == T::zero() {
        return Err(Error::domain(op, "1 − 2^s vanishes"));
    }
    let g = gamma(one::<T>() - s)?;
    Ok((p2 - c(two)) / denom * pow_pos(T::PI(), s - one::<T>()) * g * sin_pi(s / two))
}

/// η(s), entire.
///
/// Where |1 − 2^{−s}| < 0.05 (around s = 2kπi/ln2, including s = 0) the
/// accelerated alternating series is used. Otherwise the quartet sum serves
/// Re s > 0 and the functional equation serves Re s ≤ 0.
pub fn eta<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "eta";
    let s = p.s;
    check_finite(OP, s)?;
    let near_lattice = (one::<T>() - pow_pos(T::lit(2.0), -s)).norm() < T::lit(0.05);
    if near_lattice {
        eta_alternating(p, settings)
    } else if s.re > T::zero() {
        eta_quartet(p, settings)
    } else {
        eta_functional(s, settings)
    }
}

/// ζ(s) = η(s) / (1 − 2^{1−s}).
pub fn zeta<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "zeta";
    let s = p.s;
    check_finite(OP, s)?;
    let (d, k) = lattice_distance(s, T::one());
    if d < T::lit(1e-8) {
        let detail = if k == 0 {
            "s is within 1e-8 of the pole at s = 1".to_string()
        } else {
            format!(
                "s is within 1e-8 of the removable point {} where η and 1 − 2^(1−s) both vanish",
                describe_lattice_point(1.0, k)
            )
        };
        return Err(Error::domain(OP, detail));
    }
    let e = eta(p, settings)?;
    let denom = one::<T>() - pow_pos(T::lit(2.0), one::<T>() - s);
    let value = e.value / denom;
    let est = e.est_error / denom.norm() + T::epsilon() * value.norm();
    Ok(EvalResult::new(ensure_finite(OP, value)?, est, e.terms_used, e.method))
}

/// Sign of the imaginary part of an extra zero of η.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSign {
    Plus,
    Minus,
}

/// s = 1 ± 2nπi/ln2, the zeros η inherits from 1 − 2^{1−s}.
pub fn eta_extra_zero<T: Real>(n: u32, sign: ZeroSign) -> Complex<T> {
    let im = T::count(n as usize) * extra_zero_spacing::<T>();
    match sign {
        ZeroSign::Plus => Complex::new(T::one(), im),
        ZeroSign::Minus => Complex::new(T::one(), -im),
    }
}

/// ξ_a(s) = (1 − 2^s) π^{−s/2} Γ(s/2) η(s), evaluated as written.
pub fn xi_a_direct<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "xi_a_direct";
    let s = p.s;
    check_finite(OP, s)?;
    if s.re < T::lit(1e-6) {
        let k = (-s.re / T::lit(2.0)).round();
        let pole = Complex::new(-T::lit(2.0) * k, T::zero());
        if (s - pole).norm() < T::lit(1e-6) {
            return Err(Error::domain(
                OP,
                format!(
                    "s is within 1e-6 of s = {}, a pole of Γ(s/2); use xi_a_gamma_series",
                    (-2.0 * k.approx_f64()) as i64
                ),
            ));
        }
    }
    let two = T::lit(2.0);
    let e = eta(p, settings)?;
    let g = gamma(s / two)?;
    let factor = (one::<T>() - pow_pos(two, s)) * pow_pos(T::PI(), -s / two) * g;
    let value = factor * e.value;
    let est = factor.norm() * e.est_error + T::lit(32.0) * T::epsilon() * value.norm();
    Ok(EvalResult::new(ensure_finite(OP, value)?, est, e.terms_used, e.method))
}

/// Σ_{k} w_k Γ(ω, X_k)/X_k^ω over the quartet (A, B, C) with w = (−1, 2, −1).
fn upper_bracket<T: Real>(
    omega: Complex<T>,
    q: &QuartetCoefficients<T>,
    settings: &EvalSettings,
) -> Result<(Complex<T>, T, T)> {
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut est = T::zero();
    let mut largest = T::zero();
    for (x, w) in [(q.a, -1.0), (q.b, 2.0), (q.c, -1.0)] {
        let g = upper_gamma(omega, x, settings)?;
        let scale = pow_pos(x, -omega);
        let term = g.value * scale * T::lit(w);
        largest = largest.max(term.norm());
        est = est + g.est_error * scale.norm() * T::lit(w).abs();
        sum = sum + term;
    }
    Ok((sum, est, largest))
}

/// ξ_a(s) = Σ_m Σ_{ω ∈ {s/2, (1−s)/2}} [−Γ(ω,A_m)/A_m^ω + 2Γ(ω,B_m)/B_m^ω − Γ(ω,C_m)/C_m^ω].
///
/// Valid for every s. Brackets are added until one falls below
/// rel_tol × max(|sum|, |first bracket's largest term|), after at least two.
pub fn xi_a_gamma_series<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "xi_a_gamma_series";
    let s = p.s;
    check_finite(OP, s)?;
    let two = T::lit(2.0);
    let omega = s / two;
    let omega_bar = (one::<T>() - s) / two;
    let tol = settings.tol::<T>();
    let mut acc = Complex::new(T::zero(), T::zero());
    let mut est = T::zero();
    let mut scale = T::zero();
    for m in 0..settings.max_terms {
        let q = QuartetCoefficients::<T>::new(m);
        let (b1, e1, l1) = upper_bracket(omega, &q, settings)?;
        let (b2, e2, l2) = upper_bracket(omega_bar, &q, settings)?;
        let bracket = b1 + b2;
        acc = acc + bracket;
        est = est + e1 + e2;
        if m == 0 {
            scale = l1.max(l2);
        }
        if m >= 1 && bracket.norm() < tol * acc.norm().max(scale) {
            let est = est + bracket.norm() + T::lit(16.0) * T::epsilon() * scale;
            return Ok(EvalResult::new(ensure_finite(OP, acc)?, est, m + 1, Method::Series));
        }
    }
    Err(Error::Convergence {
        op: OP,
        terms: settings.max_terms,
        partial_re: acc.re.approx_f64(),
        partial_im: acc.im.approx_f64(),
    })
}

/// ξ_a(1/2 + it) = 2 Re Σ_m [−Γ(ω,A_m)/A_m^ω + 2Γ(ω,B_m)/B_m^ω − Γ(ω,C_m)/C_m^ω],
/// ω = 1/4 + it/2. The imaginary part of the result is exactly zero.
pub fn xi_a_critical<T: Real>(t: T, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "xi_a_critical";
    if !t.is_finite() {
        return Err(Error::domain(OP, format!("t must be finite, got {t}")));
    }
    let omega = Complex::new(T::lit(0.25), t / T::lit(2.0));
    let tol = settings.tol::<T>();
    let two = T::lit(2.0);
    let mut acc = T::zero();
    let mut est = T::zero();
    let mut scale = T::zero();
    for m in 0..settings.max_terms {
        let q = QuartetCoefficients::<T>::new(m);
        let (b, e, l) = upper_bracket(omega, &q, settings)?;
        let bracket = two * b.re;
        acc = acc + bracket;
        est = est + two * e;
        if m == 0 {
            scale = two * l;
        }
        if m >= 1 && bracket.abs() < tol * acc.abs().max(scale) {
            let est = est + bracket.abs() + T::lit(16.0) * T::epsilon() * scale;
            return Ok(EvalResult::new(c(acc), est, m + 1, Method::Series));
        }
    }
    Err(Error::Convergence {
        op: OP,
        terms: settings.max_terms,
        partial_re: acc.approx_f64(),
        partial_im: 0.0,
    })
}

/// The three m = 0 contributions at s = 1/2 + it:
/// (α₀, β₀, γ₀) = 2 Re (Γ(ω,A₀)/A₀^ω, Γ(ω,B₀)/B₀^ω, Γ(ω,C₀)/C₀^ω), so the
/// leading part of ξ_a is −α₀ + 2β₀ − γ₀.
pub fn critical_leading_terms<T: Real>(t: T, settings: &EvalSettings) -> Result<(T, T, T)> {
    let omega = Complex::new(T::lit(0.25), t / T::lit(2.0));
    let q = QuartetCoefficients::<T>::new(0);
    let part = |x: T| -> Result<T> {
        let g = upper_gamma(omega, x, settings)?;
        Ok(T::lit(2.0) * (g.value * pow_pos(x, -omega)).re)
    };
    Ok((part(q.a)?, part(q.b)?, part(q.c)?))
}

/// Σ_k w_k γ(ω, X_k)/X_k^ω and the upper remainder magnitude Σ |Γ(ω,X_k)/X_k^ω|.
fn lower_bracket<T: Real>(
    omega: Complex<T>,
    q: &QuartetCoefficients<T>,
    settings: &EvalSettings,
) -> Result<(Complex<T>, T, T)> {
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut est = T::zero();
    let mut remainder = T::zero();
    for (x, w) in [(q.a, -1.0), (q.b, 2.0), (q.c, -1.0)] {
        let g = lower_gamma(omega, x, settings)?;
        let scale = pow_pos(x, -omega);
        sum = sum + g.value * scale * T::lit(w);
        est = est + g.est_error * scale.norm() * T::lit(w).abs();
        // Γ(ω, X) ≈ X^{ω−1} e^{−X} once X ≫ |ω|.
        remainder = remainder + (-x).exp() / x * T::lit(w).abs();
    }
    Ok((sum, est, remainder))
}

/// ξ_a(s) = Σ_m Σ_{ω ∈ {s/2, (1−s)/2}} [−γ(ω,A_m)/A_m^ω + 2γ(ω,B_m)/B_m^ω − γ(ω,C_m)/C_m^ω]
/// for 0 < Re s < 1.
///
/// The brackets decay only like m^{−2−Re 2ω}. At least eight are summed
/// explicitly, continuing until the upper-gamma part of a bracket is below
/// rel_tol; past that point γ(ω, X) = Γ(ω) to working precision, and the rest
/// of the m-sum is −Γ(ω)(π/4)^{−ω} Σ_{m≥M}[(4m+1)^{−2ω} − 2(4m+2)^{−2ω} + (4m+3)^{−2ω}],
/// which is added in closed form.
pub fn xi_a_lower_series<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<EvalResult<T>> {
    const OP: &str = "xi_a_lower_series";
    const MIN_BRACKETS: usize = 8;
    let s = p.s;
    check_finite(OP, s)?;
    if !(s.re > T::zero() && s.re < T::one()) {
        return Err(Error::domain(
            OP,
            format!("requires 0 < Re s < 1, got s = {s}"),
        ));
    }
    let two = T::lit(2.0);
    let tol = settings.tol::<T>();
    let mut total = Complex::new(T::zero(), T::zero());
    let mut est = T::zero();
    let mut brackets = 0usize;
    for omega in [s / two, (one::<T>() - s) / two] {
        let mut acc = Complex::new(T::zero(), T::zero());
        let mut m = 0usize;
        loop {
            if m >= settings.max_terms {
                return Err(Error::Convergence {
                    op: OP,
                    terms: settings.max_terms,
                    partial_re: acc.re.approx_f64(),
                    partial_im: acc.im.approx_f64(),
                });
            }
            let q = QuartetCoefficients::<T>::new(m);
            let (b, e, rem) = lower_bracket(omega, &q, settings)?;
            acc = acc + b;
            est = est + e;
            m += 1;
            if m >= MIN_BRACKETS && rem <= tol * acc.norm().max(T::one()) {
                break;
            }
        }
        let (q_tail, q_est, _) = quartet_tail(OP, omega * two, m, settings)?;
        let lead = gamma(omega)? * pow_pos(T::FRAC_PI_4(), -omega);
        acc = acc - lead * q_tail;
        est = est + lead.norm() * q_est;
        total = total + acc;
        brackets = brackets.max(m);
    }
    let est = est + T::lit(32.0) * T::epsilon() * total.norm().max(T::one());
    Ok(EvalResult::new(ensure_finite(OP, total)?, est, brackets, Method::Series))
}

/// ξ(s) = s(s−1) ξ_a(s) / (2(1−2^s)(1−2^{1−s})).
pub fn xi_from_xi_a<T: Real>(p: SPoint<T>, xi_a: Complex<T>) -> Result<Complex<T>> {
    const OP: &str = "xi_from_xi_a";
    let s = p.s;
    check_finite(OP, s)?;
    for re in [0.0, 1.0] {
        let (d, k) = lattice_distance(s, T::lit(re));
        if d < T::lit(1e-8) {
            return Err(Error::domain(
                OP,
                format!(
                    "s is within 1e-8 of {}, a zero of (1 − 2^s)(1 − 2^(1−s))",
                    describe_lattice_point(re, k)
                ),
            ));
        }
    }
    let two = T::lit(2.0);
    let denom = (one::<T>() - pow_pos(two, s)) * (one::<T>() - pow_pos(two, one::<T>() - s)) * two;
    ensure_finite(OP, s * (s - one::<T>()) * xi_a / denom)
}

/// η(s) = ξ_a(s) π^{s/2} / ((1 − 2^s) Γ(s/2)).
pub fn eta_from_xi_a<T: Real>(p: SPoint<T>, xi_a: Complex<T>) -> Result<Complex<T>> {
    const OP: &str = "eta_from_xi_a";
    let s = p.s;
    check_finite(OP, s)?;
    let (d, k) = lattice_distance(s, T::zero());
    if d < T::lit(1e-8) {
        return Err(Error::domain(
            OP,
            format!("s is within 1e-8 of {}, a zero of 1 − 2^s", describe_lattice_point(0.0, k)),
        ));
    }
    let two = T::lit(2.0);
    if s.re < T::lit(1e-8) {
        let k = (-s.re / two).round();
        if (s - Complex::new(-two * k, T::zero())).norm() < T::lit(1e-8) {
            return Err(Error::domain(
                OP,
                format!("s is within 1e-8 of s = {}, a pole of Γ(s/2)", (-2.0 * k.approx_f64()) as i64),
            ));
        }
    }
    let g = gamma(s / two)?;
    let denom = (one::<T>() - pow_pos(two, s)) * g;
    ensure_finite(OP, xi_a * pow_pos(T::PI(), s / two) / denom)
}

/// Relative residual of the η functional equation
/// η(s) = (2^s − 2)/(1 − 2^s) · π^{s−1} Γ(1−s) sin(πs/2) η(1−s),
/// with both η values taken from the quartet sum (never from the reflection
/// route, which would make the check circular).
pub fn eta_functional_residual<T: Real>(p: SPoint<T>, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "eta_functional_residual";
    let s = p.s;
    check_finite(OP, s)?;
    for re in [0.0, 1.0] {
        let (d, k) = lattice_distance(s, T::lit(re));
        if d < T::lit(1e-8) {
            return Err(Error::domain(
                OP,
                format!("s is within 1e-8 of the excluded point {}", describe_lattice_point(re, k)),
            ));
        }
    }
    if s.im.abs() < T::lit(1e-8) && s.re > T::lit(0.5) {
        let k = s.re.round();
        if k >= T::one() && (s.re - k).abs() < T::lit(1e-8) {
            return Err(Error::domain(
                OP,
                format!("s is within 1e-8 of s = {}, a pole of Γ(1 − s)", k.approx_f64() as i64),
            ));
        }
    }
    let lhs = eta_quartet(p, settings)?.value;
    let rhs = eta_quartet(p.reflect(), settings)?.value * eta_reflection_factor(OP, s)?;
    let scale = lhs.norm().max(rhs.norm());
    if scale == T::zero() {
        return Ok(T::zero());
    }
    Ok((lhs - rhs).norm() / scale)
}

/// One grid point of a critical-line scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord<T> {
    pub t: T,
    pub xi_a: T,
    /// −1, 0 or +1; zero when |ξ_a| < 1e-15.
    pub sign: i8,
}

/// Scan output: one record per grid point (ascending t) and refined zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult<T> {
    pub records: Vec<ScanRecord<T>>,
    pub zeros: Vec<T>,
}

const SIGN_BAND: f64 = 1e-15;
const BISECTION_WIDTH: f64 = 1e-9;

fn sign_of<T: Real>(v: T) -> i8 {
    if v.abs() < T::lit(SIGN_BAND) {
        0
    } else if v > T::zero() {
        1
    } else {
        -1
    }
}

/// Grid t_min + k·step for k = 0..=⌊(t_max − t_min)/step⌋.
pub fn scan_grid<T: Real>(t_min: T, t_max: T, step: T) -> Result<Vec<T>> {
    const OP: &str = "scan_critical_line";
    if !(t_min.is_finite() && t_max.is_finite() && step.is_finite()) {
        return Err(Error::domain(OP, "t_min, t_max and step must be finite"));
    }
    if t_min > t_max {
        return Err(Error::domain(OP, format!("t_min = {t_min} exceeds t_max = {t_max}")));
    }
    if step <= T::zero() {
        return Err(Error::domain(OP, format!("step must be positive, got {step}")));
    }
    let count = ((t_max - t_min) / step + T::lit(1e-9)).floor();
    let count = count
        .to_usize()
        .filter(|&n| n < 10_000_000)
        .ok_or_else(|| Error::domain(OP, "grid has too many points"))?;
    Ok((0..=count).map(|k| t_min + T::count(k) * step).collect())
}

/// Evaluates ξ_a(1/2 + it) on the grid (in parallel), marks sign changes and
/// refines each bracketed one by bisection to an interval below 1e-9.
pub fn scan_critical_line<T: Real>(
    t_min: T,
    t_max: T,
    step: T,
    settings: &EvalSettings,
) -> Result<ScanResult<T>> {
    let grid = scan_grid(t_min, t_max, step)?;
    let records = grid
        .par_iter()
        .map(|&t| {
            xi_a_critical(t, settings).map(|r| ScanRecord {
                t,
                xi_a: r.value.re,
                sign: sign_of(r.value.re),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut zeros = Vec::new();
    for (i, r) in records.iter().enumerate() {
        if r.sign == 0 {
            zeros.push(r.t);
        } else if let Some(next) = records.get(i + 1) {
            if next.sign == -r.sign {
                zeros.push(bisect_zero(r.t, next.t, r.sign, settings)?);
            }
        }
    }
    Ok(ScanResult { records, zeros })
}

fn bisect_zero<T: Real>(mut lo: T, mut hi: T, lo_sign: i8, settings: &EvalSettings) -> Result<T> {
    let width = T::lit(BISECTION_WIDTH);
    while hi - lo >= width {
        let mid = (lo + hi) / T::lit(2.0);
        let v = xi_a_critical(mid, settings)?.value.re;
        match sign_of(v) {
            0 => return Ok(mid),
            sg if sg == lo_sign => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo + hi) / T::lit(2.0))
}

/// Independent zero locator: minimises |η(1/2 + it)| (quartet sum) over
/// [t_lo, t_hi] by golden-section search. η vanishes exactly where ξ_a does
/// on the critical line, and the modulus is V-shaped there.
pub fn critical_zero_from_eta<T: Real>(t_lo: T, t_hi: T, settings: &EvalSettings) -> Result<T> {
    const OP: &str = "critical_zero_from_eta";
    if !(t_lo < t_hi) {
        return Err(Error::domain(OP, "requires t_lo < t_hi"));
    }
    let modulus = |t: T| -> Result<T> { Ok(eta_quartet(SPoint::critical(t), settings)?.value.norm()) };
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let (mut lo, mut hi) = (t_lo, t_hi);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = modulus(x1)?;
    let mut f2 = modulus(x2)?;
    let width = T::lit(BISECTION_WIDTH);
    while hi - lo > width {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = modulus(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = modulus(x2)?;
        }
    }
    Ok((lo + hi) / T::lit(2.0))
}
