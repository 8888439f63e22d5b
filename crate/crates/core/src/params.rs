use serde::{Deserialize, Serialize};

use crate::error::{BohrError, Result};

/// The exponent pair `(p, q)` of the generalized Bohr functional
/// `|x0|^p + (sum_k |P_k|)^q <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BohrParams {
    p: f64,
    q: f64,
}

impl BohrParams {
    /// Both exponents must be finite and at least 1; for `q < 1` the radius
    /// degenerates to zero.
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if p.is_finite() && q.is_finite() && p >= 1.0 && q >= 1.0 {
            Ok(Self { p, q })
        } else {
            Err(BohrError::InvalidParams { p, q })
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// `1 - a^p` without cancellation for `a` close to 1.
pub(crate) fn one_minus_pow(a: f64, p: f64) -> f64 {
    if a <= 0.0 {
        return 1.0;
    }
    -f64::exp_m1(p * f64::ln_1p(-(1.0 - a)))
}

/// `1 - a^2` computed as `(1 - a)(1 + a)`.
pub(crate) fn one_minus_sq(a: f64) -> f64 {
    (1.0 - a) * (1.0 + a)
}
