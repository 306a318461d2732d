//! Scalar abstraction shared by every evaluator.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumCast};
use crate::double_double::DoubleDouble;

/// Real scalar type the numerics are generic over.
///
/// Implemented for `f32`, `f64` and [`DoubleDouble`]. The accuracy contracts
/// documented throughout the crate are stated for `f64`; `DoubleDouble` is
/// used where an identity check is too ill-conditioned to be resolved at
/// double precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into this type.
    #[inline]
    fn lit(x: f64) -> Self {
        // `FromPrimitive::from_f64` truncates through `from_i64` for some
        // implementors; `NumCast` does not.
        <Self as NumCast>::from(x).expect("f64 literal must be representable")
    }

    /// Converts a term count or index.
    #[inline]
    fn count(n: usize) -> Self {
        Self::lit(n as f64)
    }

    /// Nearest `f64`, used for diagnostics and error payloads.
    #[inline]
    fn approx_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
impl Real for DoubleDouble {}
