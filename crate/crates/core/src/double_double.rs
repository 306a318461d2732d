//! Double-double scalar.
//!
//! A thin wrapper over [`TwoFloat`]: addition, multiplication and the
//! transcendental functions are delegated, while division (and everything
//! derived from it) is recomputed with two correction steps so that quotients
//! keep the full ~106-bit significand. `epsilon` reports the unit roundoff of
//! the pair representation.

use num_traits::float::FloatCore;
use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};
use twofloat::TwoFloat;

/// Unevaluated sum `hi + lo` with roughly 32 significant decimal digits.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct DoubleDouble(pub TwoFloat);

impl DoubleDouble {
    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }

    fn quotient(a: TwoFloat, b: TwoFloat) -> TwoFloat {
        let bh = b.hi();
        if !bh.is_finite() || bh == 0.0 || !a.hi().is_finite() {
            return TwoFloat::from_f64(a.hi() / bh);
        }
        let q1 = a.hi() / bh;
        let r = a - b * q1;
        let q2 = r.hi() / bh;
        let r = r - b * q2;
        let q3 = r.hi() / bh;
        TwoFloat::new_add(q1, q2) + q3
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble(TwoFloat::from_f64(x))
    }
}

impl From<TwoFloat> for DoubleDouble {
    fn from(x: TwoFloat) -> Self {
        DoubleDouble(x)
    }
}

impl From<DoubleDouble> for f64 {
    fn from(x: DoubleDouble) -> f64 {
        x.0.hi() + x.0.lo()
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleDouble({:e} + {:e})", self.0.hi(), self.0.lo())
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for DoubleDouble {
            type Output = DoubleDouble;
            #[inline]
            fn $m(self, rhs: DoubleDouble) -> DoubleDouble {
                let ($a, $b) = (self.0, rhs.0);
                DoubleDouble($e)
            }
        }
        impl $atr for DoubleDouble {
            #[inline]
            fn $am(&mut self, rhs: DoubleDouble) {
                *self = $tr::$m(*self, rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, |a, b| a + b);
binop!(Sub, sub, SubAssign, sub_assign, |a, b| a - b);
binop!(Mul, mul, MulAssign, mul_assign, |a, b| a * b);
binop!(Div, div, DivAssign, div_assign, |a, b| DoubleDouble::quotient(a, b));
binop!(Rem, rem, RemAssign, rem_assign, |a, b| {
    let q = DoubleDouble::quotient(a, b).trunc();
    a - q * b
});

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    fn neg(self) -> DoubleDouble {
        DoubleDouble(-self.0)
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble(TwoFloat::from_f64(0.0))
    }
    fn is_zero(&self) -> bool {
        self.0.hi() == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble(TwoFloat::from_f64(1.0))
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = num_traits::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        <f64 as Num>::from_str_radix(s, radix).map(|x| DoubleDouble(TwoFloat::from_f64(x)))
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.0.hi() + self.0.lo())
    }
}

impl NumCast for DoubleDouble {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        <TwoFloat as NumCast>::from(n).map(DoubleDouble)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        <Self as NumCast>::from(n)
    }
    fn from_u64(n: u64) -> Option<Self> {
        <Self as NumCast>::from(n)
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(DoubleDouble(TwoFloat::from_f64(n)))
    }
}

macro_rules! consts {
    ($($name:ident),*) => {
        $(
            fn $name() -> Self {
                DoubleDouble(<TwoFloat as FloatConst>::$name())
            }
        )*
    };
}

impl FloatConst for DoubleDouble {
    consts!(
        E, FRAC_1_PI, FRAC_1_SQRT_2, FRAC_2_PI, FRAC_2_SQRT_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4,
        FRAC_PI_6, FRAC_PI_8, LN_10, LN_2, LOG10_E, LOG2_E, PI, SQRT_2, TAU, LOG10_2, LOG2_10
    );
}

macro_rules! unary {
    ($($name:ident),*) => {
        $(
            #[inline]
            fn $name(self) -> Self {
                DoubleDouble(Float::$name(self.0))
            }
        )*
    };
}

macro_rules! predicate {
    ($($name:ident),*) => {
        $(
            #[inline]
            fn $name(self) -> bool {
                Float::$name(self.0)
            }
        )*
    };
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        DoubleDouble(<TwoFloat as Float>::nan())
    }
    fn infinity() -> Self {
        DoubleDouble(<TwoFloat as Float>::infinity())
    }
    fn neg_infinity() -> Self {
        DoubleDouble(<TwoFloat as Float>::neg_infinity())
    }
    fn neg_zero() -> Self {
        DoubleDouble(<TwoFloat as Float>::neg_zero())
    }
    fn min_value() -> Self {
        DoubleDouble(<TwoFloat as Float>::min_value())
    }
    fn min_positive_value() -> Self {
        DoubleDouble(<TwoFloat as Float>::min_positive_value())
    }
    fn max_value() -> Self {
        DoubleDouble(<TwoFloat as Float>::max_value())
    }
    fn epsilon() -> Self {
        // 2^-104
        DoubleDouble(TwoFloat::from_f64(f64::EPSILON * f64::EPSILON))
    }
    fn classify(self) -> FpCategory {
        Float::classify(self.0)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        Float::integer_decode(self.0)
    }

    predicate!(is_nan, is_infinite, is_finite, is_normal, is_sign_positive, is_sign_negative);
    unary!(floor, ceil, round, trunc, fract, abs, signum, sqrt);

    fn exp(self) -> Self {
        match self.exp_parts() {
            Some((k, e)) => (e + Self::one()).scale2(k),
            None if self.0.hi() > 0.0 => Self::infinity(),
            None if self.is_nan() => self,
            None => Self::zero(),
        }
    }
    fn exp_m1(self) -> Self {
        match self.exp_parts() {
            Some((0, e)) => e,
            _ => self.exp() - Self::one(),
        }
    }
    fn exp2(self) -> Self {
        (self * Self::LN_2()).exp()
    }
    fn ln(self) -> Self {
        let h = self.0.hi();
        if !(h > 0.0) || h.is_infinite() {
            return dd(h.ln());
        }
        let mut y = dd(h.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Self::one();
        }
        y
    }
    fn ln_1p(self) -> Self {
        let h = self.0.hi();
        if !(h > -1.0) || h.is_infinite() {
            return dd(h.ln_1p());
        }
        let mut y = dd(h.ln_1p());
        let one = Self::one();
        for _ in 0..2 {
            y = y + ((one + self) * (-y).exp() - one);
        }
        y
    }
    fn log2(self) -> Self {
        self.ln() * Self::LOG2_E()
    }
    fn log10(self) -> Self {
        self.ln() * Self::LOG10_E()
    }
    fn cbrt(self) -> Self {
        let h = self.0.hi();
        if h == 0.0 || !h.is_finite() {
            return dd(h.cbrt());
        }
        let y = dd(h.cbrt());
        y - (y * y * y - self) / (dd(3.0) * y * y)
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn atan(self) -> Self {
        self.atan2(Self::one())
    }
    fn asin(self) -> Self {
        self.atan2((Self::one() - self * self).sqrt())
    }
    fn acos(self) -> Self {
        (Self::one() - self * self).sqrt().atan2(self)
    }
    fn sinh(self) -> Self {
        if self.0.hi().abs() < 0.5 {
            let e = self.exp_m1();
            // (e^x - e^-x)/2 with e^-x - 1 = -e/(1+e)
            return (e + e / (e + Self::one())) * dd(0.5);
        }
        let e = self.exp();
        (e - e.recip()) * dd(0.5)
    }
    fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()) * dd(0.5)
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let r = (a + (a * a + Self::one()).sqrt()).ln();
        if self.0.hi() < 0.0 {
            -r
        } else {
            r
        }
    }
    fn acosh(self) -> Self {
        (self + (self * self - Self::one()).sqrt()).ln()
    }
    fn atanh(self) -> Self {
        let one = Self::one();
        ((one + self) / (one - self)).ln() * dd(0.5)
    }

    fn recip(self) -> Self {
        Self::one() / self
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }
    fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
    fn powi(self, n: i32) -> Self {
        let p = DoubleDouble(FloatCore::powi(Float::abs(self.0), n.abs()));
        let p = if n < 0 { p.recip() } else { p };
        if self.0.hi() < 0.0 && n % 2 != 0 {
            -p
        } else {
            p
        }
    }
    fn powf(self, n: Self) -> Self {
        if self.0.hi() == 0.0 {
            return DoubleDouble(Float::powf(self.0, n.0));
        }
        (n * self.ln()).exp()
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn max(self, other: Self) -> Self {
        DoubleDouble(Float::max(self.0, other.0))
    }
    fn min(self, other: Self) -> Self {
        DoubleDouble(Float::min(self.0, other.0))
    }
    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Self::zero()
        }
    }
    fn hypot(self, other: Self) -> Self {
        let (a, b) = (self.abs(), other.abs());
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big.is_zero() || big.is_infinite() {
            return big;
        }
        let r = small / big;
        big * (Self::one() + r * r).sqrt()
    }
    fn atan2(self, other: Self) -> Self {
        let (y, x) = (self, other);
        let z0 = y.0.hi().atan2(x.0.hi());
        if !z0.is_finite() || (y.is_zero() && x.is_zero()) || x.is_infinite() || y.is_infinite() {
            return dd(z0);
        }
        let r = x.hypot(y);
        let (xx, yy) = (x / r, y / r);
        let mut z = dd(z0);
        for _ in 0..2 {
            let (s, c) = z.sin_cos();
            z = if xx.abs() > yy.abs() {
                z + (yy - s) / c
            } else {
                z - (xx - c) / s
            };
        }
        z
    }
    fn sin_cos(self) -> (Self, Self) {
        let h = self.0.hi();
        if !h.is_finite() {
            return (dd(f64::NAN), dd(f64::NAN));
        }
        let k = (h / std::f64::consts::FRAC_PI_2).round();
        let r = self - Self::FRAC_PI_2() * dd(k);
        let (s, c) = sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
}

#[inline]
fn dd(x: f64) -> DoubleDouble {
    DoubleDouble(TwoFloat::from_f64(x))
}

const SERIES_FLOOR: f64 = 1e-34;

impl DoubleDouble {
    /// Multiplies by 2^k exactly.
    fn scale2(self, k: i32) -> Self {
        let half = k / 2;
        self * dd(2f64.powi(half)) * dd(2f64.powi(k - half))
    }

    /// Splits e^x = 2^k (1 + e), or `None` outside the finite range.
    fn exp_parts(self) -> Option<(i32, Self)> {
        const SQUARINGS: i32 = 10;
        let h = self.0.hi();
        if !(h.abs() < 708.0) {
            return if h.abs() < 745.0 && h.is_finite() {
                let half = self * dd(0.5);
                half.exp_parts().map(|(k, e)| {
                    let one = Self::one();
                    let f = (one + e) * (one + e);
                    (2 * k, f - one)
                })
            } else {
                None
            };
        }
        let k = (h / std::f64::consts::LN_2).round();
        let r = (self - Self::LN_2() * dd(k)) * dd(2f64.powi(-SQUARINGS));
        // e^r - 1 by Taylor, |r| < 3.4e-4
        let mut term = r;
        let mut e = r;
        let mut n = 1.0;
        while term.0.hi().abs() > SERIES_FLOOR {
            n += 1.0;
            term = term * r / dd(n);
            e = e + term;
        }
        for _ in 0..SQUARINGS {
            e = e * dd(2.0) + e * e;
        }
        Some((k as i32, e))
    }
}

/// sin and cos for |r| ≤ π/4 (slightly beyond is fine).
fn sin_cos_taylor(r: DoubleDouble) -> (DoubleDouble, DoubleDouble) {
    let r2 = r * r;
    let mut s = r;
    let mut ts = r;
    let mut c = dd(1.0);
    let mut tc = dd(1.0);
    let mut n = 0.0;
    loop {
        n += 2.0;
        tc = -(tc * r2) / dd((n - 1.0) * n);
        ts = -(ts * r2) / dd(n * (n + 1.0));
        c = c + tc;
        s = s + ts;
        if tc.0.hi().abs() < SERIES_FLOOR && ts.0.hi().abs() < SERIES_FLOOR {
            return (s, c);
        }
    }
}
