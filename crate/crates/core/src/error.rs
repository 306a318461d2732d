use thiserror::Error;

/// Failure modes shared by all evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The input lies outside the operation's domain, or too close to an
    /// excluded point. `detail` names the offending point.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A series, continued fraction or quadrature hit its term cap.
    #[error("{op}: no convergence after {terms} terms (partial value {partial_re:e}{partial_im:+e}i)")]
    Convergence {
        op: &'static str,
        terms: usize,
        partial_re: f64,
        partial_im: f64,
    },
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    /// Machine-greppable code: `E_DOMAIN` or `E_CONV`.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "E_DOMAIN",
            Error::Convergence { .. } => "E_CONV",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
