//! Numerics for the Dirichlet eta function η(s), the alternating Xi function
//! ξ_a(s) = (1 − 2^s) π^{−s/2} Γ(s/2) η(s), and the theta-type kernel ϕ(x)
//! whose Mellin transform ξ_a is.
//!
//! Everything is generic over [`Real`] (`f32`, `f64`, [`DoubleDouble`]); the aliases at the bottom of this file
//! fix the scalar to `f64`, which is what the accuracy contracts refer to.

pub mod complex;
pub mod double_double;
pub mod error;
pub mod gamma;
pub mod incomplete_gamma;
pub mod mellin;
pub mod quadrature;
pub mod scalar;
pub mod settings;
pub mod theta;
pub mod zeta;

pub use complex::{checked_div, checked_ln, cplx, real_pow_complex, ComplexValue};
pub use error::{Error, Result};
pub use gamma::gamma;
pub use incomplete_gamma::{
    check_additivity, lower_gamma, lower_gamma_series, upper_gamma, upper_gamma_continued_fraction,
    upper_gamma_difference,
};
pub use mellin::{kernel_moment, mellin_xi_a, mellin_xi_a_unit_interval, special_integrals};
pub use quadrature::{gauss_legendre_rule, integrate, Quadrature, QuadratureSpec, Scheme};
pub use scalar::Real;
pub use settings::{EvalResult, EvalSettings, Method};
pub use theta::{
    ln_neg_varphi, phi_series, quartet_term, theta_trio, varphi, varphi_derivative, varphi_direct,
    varphi_minimum, varphi_result, QuartetCoefficients,
};
pub use zeta::{
    critical_leading_terms, critical_zero_from_eta, eta, eta_alternating, eta_extra_zero,
    eta_from_xi_a, eta_functional_residual, eta_quartet, extra_zero_spacing, quartet_sum,
    scan_critical_line, scan_grid, xi_a_critical, xi_a_direct, xi_a_gamma_series,
    xi_a_lower_series, xi_from_xi_a, zeta, ScanRecord, ScanResult, SPoint, ZeroSign,
};

pub use num_complex::Complex;
pub use double_double::DoubleDouble;

pub type Complex64 = Complex<f64>;
pub type EvalResult64 = EvalResult<f64>;
