//! The four subcommands, independent of argument parsing.

use alt_xi_core::{
    eta, eta_alternating, eta_quartet, gamma, kernel_moment, lower_gamma, lower_gamma_series,
    mellin_xi_a, mellin_xi_a_unit_interval, phi_series, scan_critical_line, upper_gamma,
    upper_gamma_continued_fraction, upper_gamma_difference, varphi_direct, varphi_result,
    xi_a_critical, xi_a_direct, xi_a_gamma_series, xi_a_lower_series, xi_from_xi_a, zeta,
    Complex64, EvalResult64, EvalSettings, QuadratureSpec, SPoint, Scheme,
};
use thiserror::Error;

use crate::checks::{self, CheckLine};
use crate::output::{json_num, num, Format, OutputRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] alt_xi_core::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_PARSE",
            CliError::Eval(e) => e.code(),
        }
    }

    /// 2 for usage and parse errors, 1 for evaluation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Eval(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub const FUNCTIONS: [&str; 9] = ["eta", "zeta", "xi", "xi_a", "varphi", "phi", "gamma", "lower_gamma", "upper_gamma"];

/// Methods accepted per function; the first is the default.
pub fn methods(function: &str) -> &'static [&'static str] {
    match function {
        "eta" => &["auto", "quartet", "series"],
        "xi" | "xi_a" => &["gamma-series", "direct", "lower-series", "critical", "quadrature"],
        "varphi" => &["auto", "direct"],
        "lower_gamma" => &["auto", "series"],
        "upper_gamma" => &["auto", "continued-fraction", "difference"],
        _ => &["auto"],
    }
}

fn positive_real(function: &str, s: Complex64) -> CliResult<f64> {
    if s.im != 0.0 || !(s.re > 0.0) {
        return Err(alt_xi_core::Error::Domain {
            op: "eval",
            detail: format!("{function} needs a positive real argument, got {}", crate::parse::format_complex(s)),
        }
        .into());
    }
    Ok(s.re)
}

fn xi_a_by(method: &str, s: Complex64, st: &EvalSettings) -> CliResult<EvalResult64> {
    let pt = SPoint::new(s);
    Ok(match method {
        "gamma-series" => xi_a_gamma_series(pt, st)?,
        "direct" => xi_a_direct(pt, st)?,
        "lower-series" => xi_a_lower_series(pt, st)?,
        "critical" => {
            if s.re != 0.5 {
                return Err(alt_xi_core::Error::Domain {
                    op: "xi_a_critical",
                    detail: format!("method critical needs Re s = 0.5, got {}", s.re),
                }
                .into());
            }
            xi_a_critical(s.im, st)?
        }
        "quadrature" => {
            let spec = QuadratureSpec::new(Scheme::TanhSinh, st.quad_points, 1.0)?;
            mellin_xi_a(pt, &spec, st)?
        }
        _ => unreachable!("method validated by caller"),
    })
}

/// Evaluates one function at one point.
pub fn eval(function: &str, s: Complex64, z: Option<f64>, method: Option<&str>, st: &EvalSettings) -> CliResult<OutputRecord> {
    if !FUNCTIONS.contains(&function) {
        return Err(usage(format!("unknown function {function:?}; expected one of {}", FUNCTIONS.join(", "))));
    }
    let allowed = methods(function);
    let method = method.unwrap_or(allowed[0]);
    if !allowed.contains(&method) {
        return Err(usage(format!(
            "method {method:?} is not available for {function}; expected one of {}",
            allowed.join(", ")
        )));
    }
    let needs_z = matches!(function, "lower_gamma" | "upper_gamma");
    if needs_z != z.is_some() {
        return Err(usage(if needs_z {
            format!("{function} needs --z")
        } else {
            format!("--z does not apply to {function}")
        }));
    }
    let pt = SPoint::new(s);
    let result: EvalResult64 = match function {
        "eta" => match method {
            "quartet" => eta_quartet(pt, st)?,
            "series" => eta_alternating(pt, st)?,
            _ => eta(pt, st)?,
        },
        "zeta" => zeta(pt, st)?,
        "xi_a" => xi_a_by(method, s, st)?,
        "xi" => {
            let r = xi_a_by(method, s, st)?;
            let value = xi_from_xi_a(pt, r.value)?;
            let scale = if r.value.norm() > 0.0 { value.norm() / r.value.norm() } else { 0.0 };
            EvalResult64 {
                value,
                est_error: r.est_error * scale,
                ..r
            }
        }
        "varphi" => {
            let x = positive_real(function, s)?;
            match method {
                "direct" => {
                    let v = varphi_direct(x, st)?;
                    let mut r = varphi_result(x, st)?;
                    r.value = Complex64::new(v, 0.0);
                    r.method = alt_xi_core::Method::Quartet;
                    r
                }
                _ => varphi_result(x, st)?,
            }
        }
        "phi" => {
            let x = positive_real(function, s)?;
            let v = phi_series(x, st)?;
            return Ok(record(function, s, None, Complex64::new(v, 0.0), "series", v.abs() * st.rel_tol, 0));
        }
        "gamma" => {
            let v = gamma(s)?;
            return Ok(record(function, s, None, v, "lanczos", v.norm() * 1e-13, 15));
        }
        "lower_gamma" => {
            let z = z.unwrap_or_default();
            match method {
                "series" => lower_gamma_series(s, z, st)?,
                _ => lower_gamma(s, z, st)?,
            }
        }
        "upper_gamma" => {
            let z = z.unwrap_or_default();
            match method {
                "continued-fraction" => upper_gamma_continued_fraction(s, z, st)?,
                "difference" => upper_gamma_difference(s, z, st)?,
                _ => upper_gamma(s, z, st)?,
            }
        }
        _ => unreachable!(),
    };
    Ok(record(
        function,
        s,
        z,
        result.value,
        result.method.as_str(),
        result.est_error,
        result.terms_used,
    ))
}

fn record(function: &str, s: Complex64, z: Option<f64>, value: Complex64, method: &str, est: f64, terms: usize) -> OutputRecord {
    OutputRecord {
        function: function.to_string(),
        s,
        z,
        value,
        method: method.to_string(),
        est_error: est,
        terms_used: terms,
    }
}

/// Scan output: one row per grid point, then the refined zeros.
pub fn scan(t_min: f64, t_max: f64, step: f64, format: Format, st: &EvalSettings) -> CliResult<String> {
    let res = scan_critical_line(t_min, t_max, step, st)?;
    let zeros = res.zeros.iter().map(|&z| num(z)).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("t,xi_a,sign\n");
            for r in &res.records {
                out.push_str(&format!("{},{},{}\n", num(r.t), num(r.xi_a), r.sign));
            }
            out.push_str(&format!("[{zeros}]\n"));
        }
        Format::Json => {
            for r in &res.records {
                out.push_str(&format!("{{\"t\":{},\"xi_a\":{},\"sign\":{}}}\n", json_num(r.t), json_num(r.xi_a), r.sign));
            }
            out.push_str(&format!("{{\"zeros\":[{zeros}]}}\n"));
        }
    }
    Ok(out)
}

pub const TARGETS: [&str; 4] = ["xi_a_at", "varphi_plain", "varphi_over_x", "varphi_over_sqrtx"];

/// Quadrature of one of the Mellin-type integrals. The record's `s` is the
/// point of ξ_a the integral equals.
pub fn integrate(
    target: &str,
    s: Option<Complex64>,
    form: &str,
    spec: &QuadratureSpec,
    st: &EvalSettings,
) -> CliResult<OutputRecord> {
    let moment = |c: f64| -> CliResult<(Complex64, EvalResult64)> {
        if s.is_some() {
            return Err(usage(format!("--s does not apply to {target}")));
        }
        Ok((Complex64::new(2.0 * c, 0.0), kernel_moment(c, spec, st)?))
    };
    let (point, r) = match target {
        "xi_a_at" => {
            let s = s.ok_or_else(|| usage("xi_a_at needs --s"))?;
            let r = match form {
                "symmetric" => mellin_xi_a(SPoint::new(s), spec, st)?,
                "unit-interval" => mellin_xi_a_unit_interval(SPoint::new(s), spec, st)?,
                other => return Err(usage(format!("unknown form {other:?}; expected symmetric or unit-interval"))),
            };
            (s, r)
        }
        "varphi_plain" => moment(1.0)?,
        "varphi_over_x" => moment(0.0)?,
        "varphi_over_sqrtx" => moment(0.5)?,
        other => {
            return Err(usage(format!("unknown target {other:?}; expected one of {}", TARGETS.join(", "))));
        }
    };
    Ok(record(target, point, None, r.value, spec.scheme.as_str(), r.est_error, r.terms_used))
}

/// Runs a check suite; the bool is true when nothing failed.
pub fn check(suite: &str, st: &EvalSettings) -> CliResult<(Vec<CheckLine>, bool)> {
    let lines = checks::run(suite, st).ok_or_else(|| {
        usage(format!("unknown suite {suite:?}; expected one of {}, all", checks::SUITES.join(", ")))
    })?;
    let ok = checks::all_passed(&lines);
    Ok((lines, ok))
}
