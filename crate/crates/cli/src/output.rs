//! JSON-lines and CSV rendering. Reals are written with 17 significant digits.

use alt_xi_core::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// `{:.16e}`: 17 significant digits, enough to round-trip any f64.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// As [`num`], with `null` for values JSON cannot hold.
pub fn json_num(x: f64) -> String {
    if x.is_finite() {
        num(x)
    } else {
        "null".to_string()
    }
}

pub fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_complex(z: Complex64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", json_num(z.re), json_num(z.im))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One evaluation result.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub function: String,
    pub s: Complex64,
    /// Second argument of the incomplete gamma functions.
    pub z: Option<f64>,
    pub value: Complex64,
    pub method: String,
    pub est_error: f64,
    pub terms_used: usize,
}

impl OutputRecord {
    pub const CSV_HEADER: &'static str = "function,s_re,s_im,z,value_re,value_im,method,est_error,terms_used";

    pub fn to_json(&self) -> String {
        let z = self.z.map_or_else(String::new, |z| format!(",\"z\":{}", json_num(z)));
        format!(
            "{{\"function\":{},\"s\":{}{z},\"value\":{},\"method\":{},\"est_error\":{},\"terms_used\":{}}}",
            json_str(&self.function),
            json_complex(self.s),
            json_complex(self.value),
            json_str(&self.method),
            json_num(self.est_error),
            self.terms_used
        )
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            csv_field(&self.function),
            num(self.s.re),
            num(self.s.im),
            self.z.map(num).unwrap_or_default(),
            num(self.value.re),
            num(self.value.im),
            csv_field(&self.method),
            num(self.est_error),
            self.terms_used
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => format!("{}\n{}", Self::CSV_HEADER, self.to_csv()),
        }
    }
}
