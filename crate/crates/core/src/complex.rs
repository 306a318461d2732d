//! Complex helpers on top of `num_complex::Complex`.
//!
//! Field arithmetic, `conj`, `norm`, `exp` and `ln` come straight from
//! `num-complex`; this module adds the checked variants that report domain
//! errors instead of producing NaN, and the real-base power used for every
//! `π^{-s/2}`, `A_m^{s/2}` and `x^{s/2}` in the crate.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A complex number with finite components.
pub type ComplexValue<T> = Complex<T>;

#[inline]
pub fn cplx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

#[inline]
pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn ensure_finite<T: Real>(op: &'static str, z: Complex<T>) -> Result<Complex<T>> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::domain(op, format!("non-finite value {}{:+}i", z.re, z.im)))
    }
}

/// `a / b`, rejecting `b = 0`.
pub fn checked_div<T: Real>(a: Complex<T>, b: Complex<T>) -> Result<Complex<T>> {
    if b.re.is_zero() && b.im.is_zero() {
        return Err(Error::domain("div", "division by zero"));
    }
    ensure_finite("div", a / b)
}

/// Principal logarithm, imaginary part in `(-π, π]`.
pub fn checked_ln<T: Real>(a: Complex<T>) -> Result<Complex<T>> {
    if a.re.is_zero() && a.im.is_zero() {
        return Err(Error::domain("log", "logarithm of zero"));
    }
    let mut out = a.ln();
    // atan2(-0, x<0) gives -π; fold onto the closed upper end.
    if a.im.is_zero() && a.re < T::zero() {
        out.im = T::PI();
    }
    Ok(out)
}

/// `x^a = exp(a ln x)` for real `x > 0`, using the real logarithm.
pub fn real_pow_complex<T: Real>(x: T, a: Complex<T>) -> Result<Complex<T>> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::domain(
            "real_pow_complex",
            format!("base must be a finite positive real, got {x}"),
        ));
    }
    Ok(pow_pos(x, a))
}

/// Unchecked `x^a` for a base the caller knows to be positive.
#[inline]
pub(crate) fn pow_pos<T: Real>(x: T, a: Complex<T>) -> Complex<T> {
    if x == T::one() {
        return Complex::new(T::one(), T::zero());
    }
    Complex::from_polar(x.powf(a.re), a.im * x.ln())
}

/// `(sin πr, cos πr)` for real `r`, reduced so that integers and
/// half-integers come out exact.
pub(crate) fn sincos_pi<T: Real>(r: T) -> (T, T) {
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    // r - 2 round(r/2) lies in [-1, 1].
    let mut x = r - two * (r / two).round();
    let mut sign = T::one();
    if x < T::zero() {
        x = -x;
        sign = -T::one();
    }
    // x in [0, 1]; reduce to an argument in [0, 1/4].
    let quarter = T::lit(0.25);
    let (s, c) = if x <= quarter {
        (T::PI() * x).sin_cos()
    } else if x <= T::lit(0.75) {
        let (s, c) = (T::PI() * (half - x)).sin_cos();
        (c, s)
    } else {
        let (s, c) = (T::PI() * (T::one() - x)).sin_cos();
        (s, -c)
    };
    (sign * s, c)
}

/// `sin(π z)` for complex `z`.
pub(crate) fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let (s, c) = sincos_pi(z.re);
    let y = T::PI() * z.im;
    Complex::new(s * y.cosh(), c * y.sinh())
}

/// `(e^w - 1) / w`, stable near `w = 0`.
pub(crate) fn exprel<T: Real>(w: Complex<T>) -> Complex<T> {
    if w.norm() < T::lit(0.25) {
        // Taylor series; 1/(k+1)! falls below 1e-35 well before k = 30.
        let mut term = Complex::new(T::one(), T::zero());
        let mut sum = term;
        for k in 1..40 {
            term = term * w / T::count(k + 1);
            sum = sum + term;
            if term.norm() <= T::epsilon() * sum.norm() {
                break;
            }
        }
        sum
    } else {
        (w.exp() - T::one()) / w
    }
}
