use thiserror::Error;

/// Errors raised by the radius computations and the series oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BohrError {
    #[error("invalid exponents p={p}, q={q}: both must be finite and >= 1")]
    InvalidParams { p: f64, q: f64 },

    #[error("{what} = {value} is outside its domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("unsupported exponent {what} = {value}: {reason}")]
    UnsupportedExponent {
        what: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid omega samples: {0}")]
    InvalidSamples(String),

    #[error("series tail cannot be bounded at r = {r} ({reason})")]
    TailUnbounded { r: f64, reason: String },

    #[error("invalid function family: {0}")]
    InvalidFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, BohrError>;

pub(crate) fn check_domain(
    what: &'static str,
    value: f64,
    ok: bool,
    expected: &'static str,
) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(BohrError::Domain {
            what,
            value,
            expected,
        })
    }
}
