//! Evaluation knobs and the uniform result shape.

use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Tolerance, term cap and quadrature size threaded through every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalSettings {
    /// Relative truncation tolerance, in `(0, 1e-3]`.
    pub rel_tol: f64,
    /// Hard cap on terms for any single series or continued fraction.
    pub max_terms: usize,
    /// Default node count for the quadrature oracle.
    pub quad_points: usize,
}

impl Default for EvalSettings {
    fn default() -> Self {
        EvalSettings {
            rel_tol: 1e-14,
            max_terms: 10_000,
            quad_points: 2_000,
        }
    }
}

impl EvalSettings {
    pub fn new(rel_tol: f64, max_terms: usize, quad_points: usize) -> Result<Self> {
        let settings = EvalSettings {
            rel_tol,
            max_terms,
            quad_points,
        };
        settings.validate()?;
        Ok(settings)
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Result<Self> {
        EvalSettings { rel_tol, ..self }.validate_into()
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return Err(Error::domain(
                "settings",
                format!("rel_tol must lie in (0, 1e-3], got {}", self.rel_tol),
            ));
        }
        if self.max_terms < 1 {
            return Err(Error::domain("settings", "max_terms must be at least 1"));
        }
        if self.quad_points < 16 {
            return Err(Error::domain(
                "settings",
                format!("quad_points must be at least 16, got {}", self.quad_points),
            ));
        }
        Ok(())
    }

    fn validate_into(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    #[inline]
    pub(crate) fn tol<T: Real>(&self) -> T {
        T::lit(self.rel_tol)
    }
}

/// Which algorithm produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Difference,
    ContinuedFraction,
    Quadrature,
    Quartet,
    Reflection,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Difference => "difference",
            Method::ContinuedFraction => "continued_fraction",
            Method::Quadrature => "quadrature",
            Method::Quartet => "quartet",
            Method::Reflection => "reflection",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value plus bookkeeping returned by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    /// Non-negative estimate of the absolute error.
    pub est_error: T,
    pub terms_used: usize,
    pub method: Method,
}

impl<T: Real> EvalResult<T> {
    pub(crate) fn new(value: Complex<T>, est_error: T, terms_used: usize, method: Method) -> Self {
        EvalResult {
            value,
            est_error: est_error.abs(),
            terms_used,
            method,
        }
    }
}
