//! Exact scalar radius `R_{p,q}(C)` and the certified enclosure used where no
//! closed form is known.
//!
//! Two curves drive everything:
//!
//! ```text
//! A(a) = (1-a^p)^(1/q) / (1 - a^2 + a (1-a^p)^(1/q))
//! S(a) = ( (1-a^p)^(2/q) / (1 - a^2 + (1-a^p)^(2/q)) )^(1/2)
//! ```
//!
//! `A(a)` is the radius attained by the disk automorphism with `|f(0)| = a`,
//! `S(a)` the radius guaranteed by the Cauchy-Schwarz coefficient bound. Both
//! meet at the root `â` of `x^p + x^q = 1` with common value `â`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_domain, BohrError, Result};
use crate::params::{one_minus_pow, one_minus_sq, BohrParams};
use crate::scan::{bisect_increasing, scan_minimize, ScanMin, GOLDEN_TOL, GRID_POINTS};

/// Absolute argument tolerance of the `â` bisection.
pub const ROOT_TOL: f64 = 1e-14;
pub const ROOT_MAX_ITER: usize = 200;
/// Infima over `[lower, 1)` are scanned on `[lower, SCAN_END]`.
pub const SCAN_END: f64 = 1.0 - 1e-9;
/// Slack with which the crossover inequality counts as satisfied.
pub const CONDITION_TOL: f64 = 1e-12;
/// A minimizer this close to [`SCAN_END`] may be reported as the boundary.
pub const BOUNDARY_SNAP: f64 = 1e-6;

/// Fixed numerical tolerances behind every [`RadiusResult`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub root_tol: f64,
    pub grid_points: usize,
    pub golden_tol: f64,
    pub scan_end: f64,
    pub condition_tol: f64,
    pub boundary_snap: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    root_tol: ROOT_TOL,
    grid_points: GRID_POINTS,
    golden_tol: GOLDEN_TOL,
    scan_end: SCAN_END,
    condition_tol: CONDITION_TOL,
    boundary_snap: BOUNDARY_SNAP,
};

/// The root `â ∈ (0, 1)` of `x^p + x^q = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HatRoot {
    pub a_hat: f64,
    /// `|â^p + â^q - 1|`
    pub residual: f64,
}

pub fn hat_root(params: BohrParams) -> HatRoot {
    let (p, q) = (params.p(), params.q());
    let g = |x: f64| x.powf(p) + x.powf(q) - 1.0;
    let a_hat = bisect_increasing(g, 0.0, 1.0, ROOT_TOL, ROOT_MAX_ITER);
    HatRoot {
        a_hat,
        residual: g(a_hat).abs(),
    }
}

pub(crate) fn a_curve(p: f64, q: f64, a: f64) -> f64 {
    let t = one_minus_pow(a, p).powf(1.0 / q);
    t / (one_minus_sq(a) + a * t)
}

pub(crate) fn s_curve(p: f64, q: f64, a: f64) -> f64 {
    let t = one_minus_pow(a, p).powf(2.0 / q);
    (t / (one_minus_sq(a) + t)).sqrt()
}

/// `A_{p,q}(a)` for `a ∈ [0, 1)`.
pub fn eval_a(params: BohrParams, a: f64) -> Result<f64> {
    check_domain("a", a, (0.0..1.0).contains(&a), "0 <= a < 1")?;
    Ok(a_curve(params.p(), params.q(), a))
}

/// `S_{p,q}(a)` for `a ∈ [0, 1)`.
pub fn eval_s(params: BohrParams, a: f64) -> Result<f64> {
    check_domain("a", a, (0.0..1.0).contains(&a), "0 <= a < 1")?;
    Ok(s_curve(params.p(), params.q(), a))
}

/// Both sides of `q â² + p â^{p+2} <= p â^p + q â^{p+2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverCondition {
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub a_hat: f64,
}

/// Tests whether `S` is still non-increasing at `â`, the extra hypothesis
/// under which `inf A` is exact for `p < 2 < q`.
pub fn crossover_condition(params: BohrParams) -> CrossoverCondition {
    let (p, q) = (params.p(), params.q());
    let a = hat_root(params).a_hat;
    let lhs = q * a * a + p * a.powf(p + 2.0);
    let rhs = p * a.powf(p) + q * a.powf(p + 2.0);
    CrossoverCondition {
        holds: lhs <= rhs + CONDITION_TOL,
        lhs,
        rhs,
        a_hat: a,
    }
}

/// Where an infimum is located.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Argmin {
    At(f64),
    /// Approached as `a → 1⁻`, not attained.
    Boundary,
}

impl fmt::Display for Argmin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Argmin::At(a) => write!(f, "{a}"),
            Argmin::Boundary => f.write_str("boundary a->1-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Infimum {
    pub value: f64,
    pub argmin: Argmin,
}

fn with_boundary_limit(scan: ScanMin, limit: f64) -> Infimum {
    if limit < scan.value {
        Infimum {
            value: limit,
            argmin: Argmin::Boundary,
        }
    } else {
        Infimum {
            value: scan.value,
            argmin: Argmin::At(scan.x),
        }
    }
}

/// `inf_{a ∈ [â, 1)} A_{p,q}(a)`, including the limit at `a → 1⁻`
/// (`p/(2+p)` when `q = 1`, otherwise `1`).
pub fn inf_a(params: BohrParams) -> Infimum {
    let (p, q) = (params.p(), params.q());
    let lower = hat_root(params).a_hat;
    let scan = scan_minimize(|a| a_curve(p, q, a), lower, SCAN_END);
    let limit = if q == 1.0 { p / (2.0 + p) } else { 1.0 };
    snap_boundary(scan, limit)
}

/// `inf_{a ∈ [0, 1)} S_{p,q}(a)`, including the limit at `a → 1⁻`.
pub fn inf_s(params: BohrParams) -> Infimum {
    let (p, q) = (params.p(), params.q());
    let scan = scan_minimize(|a| s_curve(p, q, a), 0.0, SCAN_END);
    snap_boundary(scan, s_boundary_limit(p, q))
}

pub(crate) fn s_boundary_limit(p: f64, q: f64) -> f64 {
    if q > 2.0 {
        1.0
    } else if q == 2.0 {
        (p / (2.0 + p)).sqrt()
    } else {
        0.0
    }
}

fn snap_boundary(scan: ScanMin, limit: f64) -> Infimum {
    let inf = with_boundary_limit(scan, limit);
    if matches!(inf.argmin, Argmin::At(_))
        && SCAN_END - scan.x <= BOUNDARY_SNAP
        && limit <= scan.value
    {
        return Infimum {
            value: limit,
            argmin: Argmin::Boundary,
        };
    }
    inf
}

/// Which branch of the case analysis produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "PQ_le2")]
    PqLe2,
    #[serde(rename = "Pgt2_Qle2")]
    Pgt2Qle2,
    #[serde(rename = "PQ_ge2")]
    PqGe2,
    #[serde(rename = "Ple2_Qgt2_exact")]
    Ple2Qgt2Exact,
    #[serde(rename = "Ple2_Qgt2_interval")]
    Ple2Qgt2Interval,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [
        CaseTag::PqLe2,
        CaseTag::Pgt2Qle2,
        CaseTag::PqGe2,
        CaseTag::Ple2Qgt2Exact,
        CaseTag::Ple2Qgt2Interval,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::PqLe2 => "PQ_le2",
            CaseTag::Pgt2Qle2 => "Pgt2_Qle2",
            CaseTag::PqGe2 => "PQ_ge2",
            CaseTag::Ple2Qgt2Exact => "Ple2_Qgt2_exact",
            CaseTag::Ple2Qgt2Interval => "Ple2_Qgt2_interval",
        }
    }

    /// Whether the branch's hypotheses hold for `params`.
    pub fn applies_to(self, params: BohrParams) -> bool {
        let (p, q) = (params.p(), params.q());
        match self {
            CaseTag::PqLe2 => p <= 2.0 && q <= 2.0,
            CaseTag::Pgt2Qle2 => p > 2.0 && q <= 2.0,
            CaseTag::PqGe2 => p >= 2.0 && q >= 2.0,
            CaseTag::Ple2Qgt2Exact => {
                p <= 2.0 && q > 2.0 && (p == 2.0 || crossover_condition(params).holds)
            }
            CaseTag::Ple2Qgt2Interval => p < 2.0 && q > 2.0,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusValue {
    Exact(f64),
    /// Certified enclosure `lo <= R <= hi`.
    Interval {
        lo: f64,
        hi: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub params: BohrParams,
    pub value: RadiusValue,
    pub case: CaseTag,
    pub argmin: Option<Argmin>,
}

impl RadiusResult {
    pub fn exact_value(&self) -> Option<f64> {
        match self.value {
            RadiusValue::Exact(v) => Some(v),
            RadiusValue::Interval { .. } => None,
        }
    }

    /// Lower end of what is certified: the exact value or `lo`.
    pub fn certified_lower(&self) -> f64 {
        match self.value {
            RadiusValue::Exact(v) => v,
            RadiusValue::Interval { lo, .. } => lo,
        }
    }

    pub fn tolerances(&self) -> &'static Tolerances {
        &TOLERANCES
    }
}

/// `R_{p,q}(C)` by the case analysis on `(p, q)`.
pub fn radius_scalar(params: BohrParams) -> RadiusResult {
    let (p, q) = (params.p(), params.q());
    let case = if p <= 2.0 && q <= 2.0 {
        CaseTag::PqLe2
    } else if q <= 2.0 {
        CaseTag::Pgt2Qle2
    } else if p > 2.0 {
        CaseTag::PqGe2
    } else if p == 2.0 || crossover_condition(params).holds {
        CaseTag::Ple2Qgt2Exact
    } else {
        CaseTag::Ple2Qgt2Interval
    };
    evaluate_branch(params, case)
}

/// Evaluates one specific branch, failing if its hypotheses do not hold.
/// Where two branches overlap (e.g. `q = 2`, `p >= 2`) both must agree.
pub fn radius_scalar_via(params: BohrParams, case: CaseTag) -> Result<RadiusResult> {
    if !case.applies_to(params) {
        return Err(BohrError::Precondition(format!(
            "branch {case} does not apply to p={}, q={}",
            params.p(),
            params.q()
        )));
    }
    Ok(evaluate_branch(params, case))
}

fn evaluate_branch(params: BohrParams, case: CaseTag) -> RadiusResult {
    let exact = |inf: Option<Infimum>, value: f64| RadiusResult {
        params,
        value: RadiusValue::Exact(value),
        case,
        argmin: inf.map(|i| i.argmin),
    };
    match case {
        CaseTag::PqLe2 => {
            let inf = inf_a(params);
            exact(Some(inf), inf.value)
        }
        CaseTag::Pgt2Qle2 => {
            let inf = inf_a(params);
            if inf.value < FRAC_1_SQRT_2 {
                exact(Some(inf), inf.value)
            } else {
                exact(None, FRAC_1_SQRT_2)
            }
        }
        CaseTag::PqGe2 => exact(None, FRAC_1_SQRT_2),
        CaseTag::Ple2Qgt2Exact if params.p() == 2.0 => exact(None, FRAC_1_SQRT_2),
        CaseTag::Ple2Qgt2Exact => {
            let inf = inf_a(params);
            exact(Some(inf), inf.value)
        }
        CaseTag::Ple2Qgt2Interval => {
            let inf = inf_s(params);
            RadiusResult {
                params,
                value: RadiusValue::Interval {
                    lo: inf.value,
                    hi: FRAC_1_SQRT_2,
                },
                case,
                argmin: Some(inf.argmin),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(p: f64, q: f64) -> BohrParams {
        BohrParams::new(p, q).unwrap()
    }

    #[test]
    fn hat_root_examples() {
        assert!((hat_root(bp(1.0, 1.0)).a_hat - 0.5).abs() < 1e-13);
        assert!((hat_root(bp(2.0, 2.0)).a_hat - FRAC_1_SQRT_2).abs() < 1e-13);
        // independent 200-step bisection of x + x^3 - 1 in 30-digit arithmetic
        let r = hat_root(bp(1.0, 3.0));
        assert!((r.a_hat - 0.682_327_803_828_019_3).abs() < 1e-12);
        assert!(r.residual <= 1e-12);
    }

    #[test]
    fn a_curve_examples() {
        assert!((eval_a(bp(1.0, 1.0), 0.5).unwrap() - 0.5).abs() < 1e-15);
        assert!((eval_a(bp(2.0, 1.0), 0.8).unwrap() - 1.0 / 1.8).abs() < 1e-15);
        let params = bp(1.7, 3.2);
        let a = hat_root(params).a_hat;
        assert!((eval_a(params, a).unwrap() - a).abs() < 1e-10);
        assert!(eval_a(params, 1.0).is_err());
        assert!(eval_a(params, -0.1).is_err());
    }

    #[test]
    fn s_curve_examples() {
        for (p, q) in [(1.0, 1.0), (3.0, 1.5), (1.2, 7.0)] {
            assert!((eval_s(bp(p, q), 0.0).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
        }
        assert!((eval_s(bp(2.0, 2.0), 0.3).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
        let params = bp(1.0, 3.0);
        let a = hat_root(params).a_hat;
        assert!((eval_s(params, a).unwrap() - a).abs() < 1e-10);
        assert!(eval_s(params, 1.0).is_err());
    }

    #[test]
    fn crossover_condition_examples() {
        let c = crossover_condition(bp(2.0, 2.0));
        assert!(c.holds);
        assert!((c.lhs - 1.5).abs() < 1e-12 && (c.rhs - 1.5).abs() < 1e-12);

        // lhs/rhs evaluated at the 30-digit root of x + x^3 = 1
        let c = crossover_condition(bp(1.0, 3.0));
        assert!(!c.holds);
        assert!((c.lhs - 1.714_385_891_802_284_8).abs() < 1e-11);
        assert!((c.rhs - 1.635_344_392_343_961_3).abs() < 1e-11);

        let c = crossover_condition(bp(1.5, 1.5));
        assert!(c.holds);
        assert!((c.lhs - 0.892_913_091_732_112_2).abs() < 1e-11);
        assert!((c.rhs - 1.047_637_697_244_037_4).abs() < 1e-11);
    }

    #[test]
    fn inf_a_examples() {
        let i = inf_a(bp(1.0, 1.0));
        assert!((i.value - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(i.argmin, Argmin::Boundary);
        assert!((inf_a(bp(2.0, 1.0)).value - 0.5).abs() < 1e-12);
        assert!((inf_a(bp(1.5, 1.0)).value - 1.5 / 3.5).abs() < 1e-12);
    }

    #[test]
    fn inf_s_examples() {
        let i = inf_s(bp(2.0, 2.0));
        assert!((i.value - FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(i.argmin, Argmin::At(0.0));

        // 10^6-point brute-force grid on [0, 1 - 1e-9]
        let i = inf_s(bp(1.0, 3.0));
        assert!((i.value - 0.675_652_419_835_808_9).abs() < 1e-6);
        assert!(i.value > 0.0 && i.value < FRAC_1_SQRT_2);
    }

    #[test]
    fn dispatch_examples() {
        let r = radius_scalar(bp(1.0, 1.0));
        assert_eq!(r.case, CaseTag::PqLe2);
        assert!((r.exact_value().unwrap() - 1.0 / 3.0).abs() < 1e-12);

        let r = radius_scalar(bp(4.0, 2.0));
        assert_eq!(r.case, CaseTag::Pgt2Qle2);
        assert!((r.exact_value().unwrap() - FRAC_1_SQRT_2).abs() < 1e-12);
        let alt = radius_scalar_via(bp(4.0, 2.0), CaseTag::PqGe2).unwrap();
        assert!((alt.exact_value().unwrap() - FRAC_1_SQRT_2).abs() < 1e-12);

        let r = radius_scalar(bp(2.0, 5.0));
        assert_eq!(r.case, CaseTag::Ple2Qgt2Exact);
        assert_eq!(r.exact_value(), Some(FRAC_1_SQRT_2));

        let r = radius_scalar(bp(1.0, 3.0));
        assert_eq!(r.case, CaseTag::Ple2Qgt2Interval);
        match r.value {
            RadiusValue::Interval { lo, hi } => {
                assert!((lo - inf_s(bp(1.0, 3.0)).value).abs() < 1e-15);
                assert_eq!(hi, FRAC_1_SQRT_2);
            }
            RadiusValue::Exact(_) => panic!("expected an interval"),
        }
        assert_eq!(r.tolerances().grid_points, 2048);
    }

    #[test]
    fn inapplicable_branch_is_rejected() {
        assert!(radius_scalar_via(bp(1.0, 1.0), CaseTag::PqGe2).is_err());
        assert!(radius_scalar_via(bp(1.0, 3.0), CaseTag::Ple2Qgt2Exact).is_err());
        assert!(radius_scalar_via(bp(3.0, 1.0), CaseTag::PqLe2).is_err());
    }

    #[test]
    fn q_one_closed_form() {
        for i in 0..=20 {
            let p = 1.0 + i as f64 / 20.0;
            let v = radius_scalar(bp(p, 1.0)).exact_value().unwrap();
            assert!((v - p / (2.0 + p)).abs() < 1e-9, "p={p}");
        }
    }
}
