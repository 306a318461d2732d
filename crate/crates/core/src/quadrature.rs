//! Fixed-size quadrature rules for smooth complex integrands on a finite
//! interval, with an error estimate from a coarser run of the same rule.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Node family used by [`QuadratureSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    TanhSinh,
    GaussLegendreComposite,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::TanhSinh => "tanh_sinh",
            Scheme::GaussLegendreComposite => "gauss_legendre_composite",
        }
    }
}

/// Scheme, node count and (for the Mellin integrals) the split point of the
/// half-line, which is x = 1 unless overridden.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub points: usize,
    pub split_at: f64,
}

impl QuadratureSpec {
    pub fn new(scheme: Scheme, points: usize, split_at: f64) -> Result<Self> {
        if points < 16 {
            return Err(Error::domain("quadrature", format!("points must be at least 16, got {points}")));
        }
        if !(split_at > 0.0 && split_at.is_finite()) {
            return Err(Error::domain("quadrature", format!("split_at must be positive, got {split_at}")));
        }
        Ok(QuadratureSpec { scheme, points, split_at })
    }

    pub fn tanh_sinh(points: usize) -> Result<Self> {
        Self::new(Scheme::TanhSinh, points, 1.0)
    }

    pub fn gauss_legendre(points: usize) -> Result<Self> {
        Self::new(Scheme::GaussLegendreComposite, points, 1.0)
    }

    pub fn with_points(self, points: usize) -> Result<Self> {
        Self::new(self.scheme, points, self.split_at)
    }
}

/// Integral, refinement estimate |I(N) − I(N/2)| and number of integrand calls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: Complex<T>,
    pub est_error: T,
    pub evaluations: usize,
}

const GL_ORDER: usize = 16;

/// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre<T: Real>(n: usize, x: T) -> (T, T) {
    let (mut p0, mut p1) = (T::one(), x);
    for k in 2..=n {
        let kt = T::count(k);
        let p2 = ((T::lit(2.0) * kt - T::one()) * x * p1 - (kt - T::one()) * p0) / kt;
        p0 = p1;
        p1 = p2;
    }
    (p1, T::count(n) * (x * p1 - p0) / (x * x - T::one()))
}

/// Gauss–Legendre nodes and weights on [−1, 1], by Newton iteration on P_n.
pub fn gauss_legendre_rule<T: Real>(n: usize) -> Vec<(T, T)> {
    let mut rule = Vec::with_capacity(n);
    let nt = T::count(n);
    for i in 0..n {
        let mut x = (T::PI() * (T::count(i) + T::lit(0.75)) / (nt + T::lit(0.5))).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * T::lit(4.0) {
                break;
            }
        }
        let dp = legendre(n, x).1;
        rule.push((x, T::lit(2.0) / ((T::one() - x * x) * dp * dp)));
    }
    rule.reverse();
    rule
}

fn evaluate<T, F>(nodes: &[T], f: &F) -> Result<Vec<Complex<T>>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>> + Sync,
{
    nodes.par_iter().map(|&x| f(x)).collect()
}

fn weighted_sum<T: Real>(values: &[Complex<T>], weights: &[T]) -> Complex<T> {
    values
        .iter()
        .zip(weights)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (&v, &w)| acc + v * w)
}

fn composite_gl<T: Real>(a: T, b: T, panels: usize, order: usize) -> (Vec<T>, Vec<T>) {
    let rule = gauss_legendre_rule::<T>(order);
    let width = (b - a) / T::count(panels);
    let half = width / T::lit(2.0);
    let mut nodes = Vec::with_capacity(panels * order);
    let mut weights = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let mid = a + width * (T::count(p) + T::lit(0.5));
        for &(x, w) in &rule {
            nodes.push(mid + half * x);
            weights.push(half * w);
        }
    }
    (nodes, weights)
}

fn gauss_legendre<T, F>(a: T, b: T, points: usize, f: &F) -> Result<Quadrature<T>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>> + Sync,
{
    let panels = (points / GL_ORDER).max(1);
    let (nodes, weights) = composite_gl(a, b, panels, GL_ORDER);
    let fine = weighted_sum(&evaluate(&nodes, f)?, &weights);
    // Coarse run: half the panels, or an 8-point rule when only one panel exists.
    let (cn, cw) = if panels >= 2 {
        composite_gl(a, b, panels / 2, GL_ORDER)
    } else {
        composite_gl(a, b, 1, GL_ORDER / 2)
    };
    let coarse = weighted_sum(&evaluate(&cn, f)?, &cw);
    Ok(Quadrature {
        value: fine,
        est_error: (fine - coarse).norm(),
        evaluations: nodes.len() + cn.len(),
    })
}

fn tanh_sinh<T, F>(a: T, b: T, points: usize, f: &F) -> Result<Quadrature<T>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>> + Sync,
{
    let half_pi = T::FRAC_PI_2();
    // Beyond t_max the weights fall below ε².
    let t_max = (T::lit(2.0) * (-T::epsilon().ln()) / T::PI()).asinh();
    let n = (points - 1).div_ceil(2) * 2;
    let h = T::lit(2.0) * t_max / T::count(n);
    let width = b - a;
    let mut nodes = Vec::with_capacity(n + 1);
    let mut weights = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let t = -t_max + h * T::count(k);
        let u = half_pi * t.sinh();
        // Distance to the nearer endpoint, computed without cancellation.
        let x = if u < T::zero() {
            a + width / (T::one() + (-T::lit(2.0) * u).exp())
        } else {
            b - width / (T::one() + (T::lit(2.0) * u).exp())
        };
        let c = u.cosh();
        nodes.push(x);
        weights.push(width / T::lit(2.0) * half_pi * t.cosh() / (c * c));
    }
    let values = evaluate(&nodes, f)?;
    let fine = weighted_sum(&values, &weights) * h;
    let coarse = values
        .iter()
        .zip(&weights)
        .step_by(2)
        .fold(Complex::new(T::zero(), T::zero()), |acc, (&v, &w)| acc + v * w)
        * (h * T::lit(2.0));
    Ok(Quadrature {
        value: fine,
        est_error: (fine - coarse).norm(),
        evaluations: nodes.len(),
    })
}

/// ∫_a^b f(x) dx for a smooth integrand. Node values are computed in
/// parallel and summed in ascending node order.
pub fn integrate<T, F>(spec: &QuadratureSpec, a: T, b: T, f: F) -> Result<Quadrature<T>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>> + Sync,
{
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain("quadrature", format!("need finite a < b, got [{a}, {b}]")));
    }
    match spec.scheme {
        Scheme::TanhSinh => tanh_sinh(a, b, spec.points, &f),
        Scheme::GaussLegendreComposite => gauss_legendre(a, b, spec.points, &f),
    }
}
