//! Complex-number grammar: `<real>`, `<real>+<real>i`, `<real>-<real>i`, with a
//! bare `i` standing for `1i`. No whitespace.

use alt_xi_core::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("cannot parse {input:?} as a complex number: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: &'static str,
}

fn fail(input: &str, reason: &'static str) -> ParseError {
    ParseError {
        input: input.to_string(),
        reason,
    }
}

fn real(input: &str, text: &str) -> Result<f64, ParseError> {
    if text.is_empty() {
        return Err(fail(input, "missing number"));
    }
    if !text.bytes().all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b)) {
        return Err(fail(input, "unexpected character"));
    }
    let v: f64 = text.parse().map_err(|_| fail(input, "malformed real number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(fail(input, "number out of range"))
    }
}

/// Parses a real or complex literal.
pub fn parse_complex(input: &str) -> Result<Complex64, ParseError> {
    if input.is_empty() {
        return Err(fail(input, "empty input"));
    }
    let Some(body) = input.strip_suffix('i') else {
        return Ok(Complex64::new(real(input, input)?, 0.0));
    };
    // The sign that starts the imaginary part: the last + or − that is not
    // leading and not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(input, t)?,
    };
    let re = if re_text.is_empty() { 0.0 } else { real(input, re_text)? };
    Ok(Complex64::new(re, im))
}

/// Canonical text form; `parse_complex` inverts it exactly.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return format!("{}", z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    let mag = z.im.abs();
    if mag == 1.0 {
        format!("{}{sign}i", z.re)
    } else {
        format!("{}{sign}{mag}i", z.re)
    }
}
