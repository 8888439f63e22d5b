//! The three Bohr functionals on truncated series, radius location by
//! bisection, and Bombieri's coefficient-sum bound.

use serde::{Deserialize, Serialize};

use crate::error::{check_domain, BohrError, Result};
use crate::oracle::family::FunctionFamily;
use crate::oracle::series::{HomogeneousSums, KahanSum, PowerSeries1D, Tail, MAX_TERMS};
use crate::params::BohrParams;

/// A functional value together with the part contributed by the tail bound.
/// The true value lies in `[value - tail_error, value]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub tail_error: f64,
}

impl Quantity {
    pub fn lower(&self) -> f64 {
        self.value - self.tail_error
    }
}

fn check_r(r: f64) -> Result<()> {
    check_domain("r", r, (0.0..1.0).contains(&r), "0 <= r < 1")
}

/// `Σ_{n=start..=K} |c_n|^p r^{np}`.
fn power_partial(series: &PowerSeries1D, start: usize, p: f64, r: f64) -> f64 {
    let rp = r.powf(p);
    let mut weight = rp.powi(start as i32);
    let mut acc = KahanSum::default();
    for &m in &series.moduli()[start..] {
        if m > 0.0 {
            acc.add(m.powf(p) * weight);
        }
        weight *= rp;
    }
    acc.value()
}

/// `|c_0|^p + (Σ_{n>=1} |c_n| r^n)^q`, tail added inside the power.
pub fn bohr_quantity(series: &PowerSeries1D, params: BohrParams, r: f64) -> Result<Quantity> {
    check_r(r)?;
    let head = series.head().powf(params.p());
    let inner = if series.order() >= 1 {
        power_partial(series, 1, 1.0, r)
    } else {
        0.0
    };
    let tail = series.tail().sum(series.order(), r)?;
    let value = head + (inner + tail).powf(params.q());
    let truncated = head + inner.powf(params.q());
    Ok(Quantity {
        value,
        tail_error: if tail == 0.0 { 0.0 } else { value - truncated },
    })
}

/// `Σ_{n>=0} |c_n|^p r^{np}`.
pub fn p_bohr_quantity(series: &PowerSeries1D, p: f64, r: f64) -> Result<Quantity> {
    check_domain("p", p, p >= 1.0, "p >= 1")?;
    check_r(r)?;
    let partial = power_partial(series, 0, p, r);
    let tail = series.tail().power_sum(series.order(), r, p)?;
    Ok(Quantity {
        value: partial + tail,
        tail_error: tail,
    })
}

/// `(1/2)(Σ_{n>=0} |c_n|^p r^{np})^{1/p}` for series with `c_0 = 1`.
pub fn h_quantity(series: &PowerSeries1D, p: f64, r: f64) -> Result<Quantity> {
    check_domain("p", p, p > 0.0, "p > 0")?;
    check_r(r)?;
    if (series.head() - 1.0).abs() > 1e-12 {
        return Err(BohrError::Precondition(format!(
            "H_p functional needs a positive-real family with c_0 = 1, got |c_0| = {}",
            series.head()
        )));
    }
    let partial = power_partial(series, 0, p, r);
    let tail = series.tail().power_sum(series.order(), r, p)?;
    let value = 0.5 * (partial + tail).powf(1.0 / p);
    Ok(Quantity {
        value,
        tail_error: value - 0.5 * partial.powf(1.0 / p),
    })
}

/// Bohr functional on `ρD^n` evaluated on the diagonal. Valid for families
/// whose coefficient norms are attained at nonnegative arguments, which is
/// the case for every homogeneous-sum family built here.
pub fn polydisk_bohr_quantity(
    h: &HomogeneousSums,
    params: BohrParams,
    rho: f64,
) -> Result<Quantity> {
    bohr_quantity(&h.diagonal_series(), params, rho)
}

/// `H_p` functional on `ρD^n` from homogeneous sums. Uses `s_k^p`, which
/// bounds `Σ_{|α|=k} |x_α|^p` from above for `p >= 1` and is exact when each
/// degree carries a single monomial.
pub fn polydisk_h_quantity(h: &HomogeneousSums, p: f64, rho: f64) -> Result<Quantity> {
    h_quantity(&h.diagonal_series(), p, rho)
}

/// Which functional a radius refers to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Functional {
    /// `|c_0|^p + (Σ |c_n| r^n)^q <= 1`
    Rpq(BohrParams),
    /// `Σ |c_n|^p r^{np} <= 1`
    Rp(f64),
    /// `(1/2)(Σ |c_n|^p r^{np})^{1/p} <= 1`
    Hp(f64),
}

impl Functional {
    pub fn evaluate(&self, series: &PowerSeries1D, r: f64) -> Result<Quantity> {
        match *self {
            Functional::Rpq(params) => bohr_quantity(series, params, r),
            Functional::Rp(p) => p_bohr_quantity(series, p, r),
            Functional::Hp(p) => h_quantity(series, p, r),
        }
    }
}

/// Upper end of the bisection interval in `r`.
pub const RADIUS_R_MAX: f64 = 1.0 - 1e-8;
pub const BISECTION_ITERS: usize = 60;
pub const BISECTION_TOL: f64 = 1e-10;
const MONOTONE_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusOptions {
    /// Fixed truncation order; `None` picks one per evaluation radius.
    pub terms: Option<usize>,
    /// Bisection tolerance in `r`.
    pub tol: f64,
}

impl Default for RadiusOptions {
    fn default() -> Self {
        Self {
            terms: None,
            tol: BISECTION_TOL,
        }
    }
}

/// Certified bracket `[lower, upper]` of the functional at `r`.
fn bracket(
    family: &FunctionFamily,
    functional: &Functional,
    r: f64,
    opts: &RadiusOptions,
) -> Result<(f64, f64)> {
    let order = match opts.terms {
        Some(k) => Some(k),
        None => match family.terms_for(r) {
            Ok(k) => Some(k),
            Err(BohrError::TailUnbounded { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    if let Some(k) = order {
        let series = family.coefficients(k)?;
        match functional.evaluate(&series, r) {
            Ok(q) => return Ok((q.lower(), q.value)),
            Err(BohrError::TailUnbounded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    // no usable tail bound: the capped partial sum is still a lower bound
    let series = family.coefficients(order.unwrap_or(MAX_TERMS))?;
    let truncated = PowerSeries1D::new(series.moduli().to_vec(), Tail::Zero)?;
    let lower = functional.evaluate(&truncated, r)?.value;
    if lower > 1.0 {
        Ok((lower, f64::INFINITY))
    } else {
        Err(BohrError::TailUnbounded {
            r,
            reason: "partial sum does not decide the inequality and no tail bound applies".into(),
        })
    }
}

/// `sup{r : functional(f, r) <= 1}` by bisection on `[0, 1 - 1e-8]`.
///
/// Returns 1 when the functional is still below `1 - 1e-8` at the right end.
/// The functional must be nondecreasing in `r`; this is checked on a
/// 16-point grid before bisecting.
pub fn radius_of(family: &FunctionFamily, functional: Functional) -> Result<f64> {
    radius_of_with(family, functional, &RadiusOptions::default())
}

pub fn radius_of_with(
    family: &FunctionFamily,
    functional: Functional,
    opts: &RadiusOptions,
) -> Result<f64> {
    family.validate()?;
    let mut previous = f64::NEG_INFINITY;
    for i in 0..MONOTONE_GRID {
        let r = RADIUS_R_MAX * i as f64 / (MONOTONE_GRID - 1) as f64;
        let (lower, upper) = bracket(family, &functional, r, opts)?;
        let v = if upper.is_finite() { upper } else { lower };
        if v < previous - 1e-12 * previous.abs().max(1.0) {
            return Err(BohrError::Precondition(format!(
                "functional is not nondecreasing in r near r = {r}"
            )));
        }
        previous = v;
    }

    let (_, upper) = bracket(family, &functional, RADIUS_R_MAX, opts)?;
    if upper < RADIUS_R_MAX {
        return Ok(1.0);
    }
    let (_, at_zero) = bracket(family, &functional, 0.0, opts)?;
    if at_zero > 1.0 {
        return Ok(0.0);
    }

    let (mut lo, mut hi) = (0.0, RADIUS_R_MAX);
    for _ in 0..BISECTION_ITERS {
        if hi - lo <= opts.tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let (_, upper) = bracket(family, &functional, mid, opts)?;
        if upper <= 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Bombieri's bound on `Σ_{n>=1} |a_n| r^n` for a self-map of the disk with
/// `|a_0| = a`: `r(1-a²)/(1-ar)` when `r <= a`, and `r sqrt(1-a²)/sqrt(1-r²)`
/// always; the smaller applicable one is returned.
pub fn bombieri_bound(a: f64, r: f64) -> Result<f64> {
    check_domain("a", a, (0.0..=1.0).contains(&a), "0 <= a <= 1")?;
    check_r(r)?;
    let one_minus_a2 = (1.0 - a) * (1.0 + a);
    let general = r * one_minus_a2.sqrt() / ((1.0 - r) * (1.0 + r)).sqrt();
    if r <= a {
        Ok(general.min(r * one_minus_a2 / (1.0 - a * r)))
    } else {
        Ok(general)
    }
}
