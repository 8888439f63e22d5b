//! Radii on the polydisk `D^n` and for vector-valued maps.

use std::f64::consts::{E, LN_2};

use serde::{Deserialize, Serialize};

use crate::error::{check_domain, BohrError, Result};
use crate::params::{one_minus_pow, one_minus_sq, BohrParams};
use crate::radius::{inf_s, s_curve, Argmin, SCAN_END};

fn check_hilbert(params: BohrParams, n: usize) -> Result<()> {
    if params.q() < 2.0 {
        return Err(BohrError::UnsupportedExponent {
            what: "q",
            value: params.q(),
            reason: "the Hilbert-space formula requires q >= 2; for q < 2 the radius of an infinite-dimensional Hilbert space vanishes",
        });
    }
    check_domain("n", n as f64, n >= 1, "n >= 1")
}

/// `x ↦ (1 - (1 - x²)^{1/n})^{1/2}`, strictly increasing on `[0, 1)`.
pub(crate) fn polydisk_transform(x: f64, n: usize) -> f64 {
    let log_base = f64::ln_1p(-x * x);
    (-f64::exp_m1(log_base / n as f64)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HilbertRadius {
    pub value: f64,
    pub argmin: Argmin,
}

/// `R^n_{p,q}(H)` for an infinite-dimensional Hilbert space `H`.
///
/// The transform is monotone, so the infimum over `a` is located by the same
/// scan as `inf S` and pushed through the transform.
pub fn hilbert_radius(params: BohrParams, n: usize) -> Result<HilbertRadius> {
    check_hilbert(params, n)?;
    let inf = inf_s(params);
    Ok(HilbertRadius {
        value: polydisk_transform(inf.value, n),
        argmin: inf.argmin,
    })
}

/// Data of the extremal map
/// `χ(z) = b3 e_0 + c Σ_k r3^k Σ_{|α|=k} z^α e_α` with `c = (1-b3²)/(1-b3^p)^{1/q}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HilbertExtremal {
    pub b3: f64,
    pub r3: f64,
    pub scale_c: f64,
    pub n: usize,
}

impl HilbertExtremal {
    /// `1/(1-r3²)^n - 1`, the diagonal sum `Σ_k C(n+k-1,k) r3^{2k}`.
    pub fn diagonal_sum(&self) -> f64 {
        f64::exp_m1(-(self.n as f64) * f64::ln_1p(-self.r3 * self.r3))
    }

    /// `‖χ‖² = b3² + c²(1/(1-r3²)^n - 1)`; equals 1.
    pub fn boundary_identity(&self) -> f64 {
        self.b3 * self.b3 + self.scale_c * self.scale_c * self.diagonal_sum()
    }

    /// The Bohr functional of `χ` at radius `r3`; equals 1.
    pub fn bohr_identity(&self, params: BohrParams) -> f64 {
        self.b3.powf(params.p()) + (self.scale_c * self.diagonal_sum()).powf(params.q())
    }
}

pub fn hilbert_extremal(params: BohrParams, n: usize) -> Result<HilbertExtremal> {
    check_hilbert(params, n)?;
    let b3 = match inf_s(params).argmin {
        Argmin::At(a) => a,
        // not attained: use the last scanned point
        Argmin::Boundary => SCAN_END,
    };
    let (p, q) = (params.p(), params.q());
    let r3 = polydisk_transform(s_curve(p, q, b3), n);
    let scale_c = one_minus_sq(b3) / one_minus_pow(b3, p).powf(1.0 / q);
    Ok(HilbertExtremal { b3, r3, scale_c, n })
}

/// Lower bound `R (1 - (1/2)^{1/n})` for `R^n_{p,q}(X)` given `R <= R_{p,q}(X)`.
pub fn polydisk_lower(scalar_radius: f64, n: usize) -> Result<f64> {
    check_domain(
        "R",
        scalar_radius,
        scalar_radius > 0.0 && scalar_radius <= 1.0,
        "0 < R <= 1",
    )?;
    check_domain("n", n as f64, n >= 1, "n >= 1")?;
    Ok(-scalar_radius * f64::exp_m1(-LN_2 / n as f64))
}

/// `sqrt(ln n / n)`, the growth rate of `R^n_{p,q}(X)` for finite-dimensional `X`.
pub fn finite_dim_asymptotic(n: usize) -> Result<f64> {
    check_domain("n", n as f64, n >= 2, "n >= 2")?;
    let n = n as f64;
    Ok((n.ln() / n).sqrt())
}

/// `r_p^n(C) >= (r_1^n(C))^{(2-p)/p}` for `1 < p < 2`.
pub fn pbohr_scalar_lower(p: f64, r1n: f64) -> Result<f64> {
    check_domain("p", p, p > 1.0 && p < 2.0, "1 < p < 2")?;
    check_domain("r1n", r1n, r1n > 0.0 && r1n <= 1.0, "0 < r1n <= 1")?;
    Ok(r1n.powf((2.0 - p) / p))
}

/// The constant `I_p(X)` of a `p`-uniformly PL-convex space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlConvexityConstant {
    p: f64,
    ip: f64,
}

impl PlConvexityConstant {
    pub fn new(p: f64, ip: f64) -> Result<Self> {
        check_domain("p", p, p >= 2.0, "p >= 2")?;
        check_domain("ip", ip, ip > 0.0, "ip > 0")?;
        Ok(Self { p, ip })
    }

    /// `I_2 = 1` for a Hilbert space.
    pub fn hilbert() -> Self {
        Self { p: 2.0, ip: 1.0 }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn ip(&self) -> f64 {
        self.ip
    }
}

/// `(I_p/(2^p + I_p))^{2/p}`, a lower bound for `r_p^n(X)` valid for every `n`.
pub fn pbohr_vector_lower(c: PlConvexityConstant) -> f64 {
    let two_p = 2f64.powf(c.p);
    (c.ip / (two_p + c.ip)).powf(2.0 / c.p)
}

/// `H_p^n = ((2^p - 1)/(2^{p+1} - 1))^{1/p}` for `p >= 2`, independent of `n`.
pub fn hpn_exact(p: f64) -> Result<f64> {
    if !(p >= 2.0 && p.is_finite()) {
        return Err(BohrError::UnsupportedExponent {
            what: "p",
            value: p,
            reason: "the closed form holds for p >= 2; use hpn_lower_combine for 1 < p < 2",
        });
    }
    Ok(half_plane_radius(p))
}

/// Radius at which `(1+z)/(1-z)` saturates the `H_p` functional. For `p >= 2`
/// it is `H_p^n`; for other `p > 0` an upper bound for it.
pub fn half_plane_radius(p: f64) -> f64 {
    // (2^p - 1)/(2^{p+1} - 1) = (1 - 2^-p)/(2 - 2^-p), stable for large p
    let t = 2f64.powf(-p);
    ((1.0 - t) / (2.0 - t)).powf(1.0 / p)
}

/// `h1^{(2-p)/p} h2^{(2p-2)/p}`, a lower bound for `H_p^n` when `1 < p < 2`
/// from lower bounds `h1 <= H_1^n`, `h2 <= H_2^n`.
pub fn hpn_lower_combine(p: f64, h1: f64, h2: f64) -> Result<f64> {
    check_domain("p", p, p > 1.0 && p < 2.0, "1 < p < 2")?;
    check_domain("h1", h1, h1 > 0.0 && h1 <= 1.0, "0 < h1 <= 1")?;
    check_domain("h2", h2, h2 > 0.0 && h2 <= 1.0, "0 < h2 <= 1")?;
    Ok(h1.powf((2.0 - p) / p) * h2.powf((2.0 * p - 2.0) / p))
}

/// Tabulated values of `Ω_X(δ)`, strictly increasing in `δ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaSamples {
    pairs: Vec<(f64, f64)>,
}

impl OmegaSamples {
    pub fn new(pairs: Vec<(f64, f64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(BohrError::InvalidSamples("no samples".into()));
        }
        for &(delta, omega) in &pairs {
            if !(delta.is_finite() && omega.is_finite() && delta >= 0.0 && omega >= 0.0) {
                return Err(BohrError::InvalidSamples(format!(
                    "sample ({delta}, {omega}) is not a pair of finite nonnegative reals"
                )));
            }
        }
        if pairs.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(BohrError::InvalidSamples(
                "delta values must be strictly increasing".into(),
            ));
        }
        Ok(Self { pairs })
    }

    /// Samples `δ ↦ ω(δ)` at the given deltas.
    pub fn tabulate(deltas: &[f64], omega: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(deltas.iter().map(|&d| (d, omega(d))).collect())
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }
}

/// Estimated constant in `Ω_X(δ) <= C((1+δ)^q - (1+δ)^{q-p})^{1/q}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OmegaConstant {
    Finite(f64),
    Divergent,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaCheck {
    pub holds: bool,
    pub c_est: OmegaConstant,
    /// Largest observed ratio, reported even when flagged divergent.
    pub max_ratio: f64,
}

/// Ratio growth across the two smallest positive deltas treated as divergence.
pub const OMEGA_GROWTH_FACTOR: f64 = 10.0;
/// Local log-log slope of the ratio below which it is treated as a power-law blow-up.
pub const OMEGA_SLOPE_LIMIT: f64 = -0.05;

/// Sampled check of the growth condition on `Ω_X`.
///
/// This is a necessary condition over the given samples, not a proof for all
/// `δ`. The ratio is flagged divergent when, between the two smallest positive
/// deltas, it grows by more than [`OMEGA_GROWTH_FACTOR`] or follows a power law
/// steeper than [`OMEGA_SLOPE_LIMIT`].
pub fn omega_condition_check(params: BohrParams, samples: &OmegaSamples) -> Result<OmegaCheck> {
    let (p, q) = (params.p(), params.q());
    let mut ratios = Vec::with_capacity(samples.pairs.len());
    for &(delta, omega) in &samples.pairs {
        if delta == 0.0 {
            if omega > 0.0 {
                return Err(BohrError::InvalidSamples(format!(
                    "omega(0) = {omega} > 0 admits no finite constant"
                )));
            }
            continue;
        }
        let base = 1.0 + delta;
        let gauge = (base.powf(q) - base.powf(q - p)).powf(1.0 / q);
        let ratio = if omega == 0.0 { 0.0 } else { omega / gauge };
        ratios.push((delta, ratio));
    }

    let max_ratio = ratios.iter().map(|r| r.1).fold(0.0, f64::max);
    let divergent = match ratios.as_slice() {
        [(d1, r1), (d2, r2), ..] if *r1 > 0.0 && *r2 > 0.0 => {
            let slope = (r1 / r2).ln() / (d1 / d2).ln();
            r1 / r2 > OMEGA_GROWTH_FACTOR || slope < OMEGA_SLOPE_LIMIT
        }
        _ => false,
    };
    let c_est = if divergent || !max_ratio.is_finite() {
        OmegaConstant::Divergent
    } else {
        OmegaConstant::Finite(max_ratio)
    };
    Ok(OmegaCheck {
        holds: matches!(c_est, OmegaConstant::Finite(_)),
        c_est,
        max_ratio,
    })
}

/// `R_{p,q}(Y, X) >= R/(2e)` for maps from the unit ball of any `Y`,
/// given `R <= R_{p,q}(X)`.
pub fn frechet_lower(scalar_radius: f64) -> Result<f64> {
    check_domain(
        "R",
        scalar_radius,
        scalar_radius > 0.0 && scalar_radius <= 1.0,
        "0 < R <= 1",
    )?;
    Ok(scalar_radius / (2.0 * E))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn bp(p: f64, q: f64) -> BohrParams {
        BohrParams::new(p, q).unwrap()
    }

    #[test]
    fn hilbert_radius_examples() {
        for (p, q) in [(1.0, 3.0), (2.0, 2.0), (3.5, 2.5)] {
            let h = hilbert_radius(bp(p, q), 1).unwrap();
            assert!((h.value - inf_s(bp(p, q)).value).abs() < 1e-12);
        }
        let h = hilbert_radius(bp(2.0, 2.0), 2).unwrap();
        assert!((h.value - 0.541_196_100_146_197).abs() < 1e-12);
        let h = hilbert_radius(bp(2.0, 2.0), 1).unwrap();
        assert!((h.value - FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn hilbert_rejects_small_q() {
        assert!(matches!(
            hilbert_radius(bp(2.0, 1.5), 3),
            Err(BohrError::UnsupportedExponent { .. })
        ));
        assert!(hilbert_extremal(bp(1.0, 1.0), 1).is_err());
        assert!(hilbert_radius(bp(2.0, 2.0), 0).is_err());
    }

    #[test]
    fn extremal_identities() {
        let e = hilbert_extremal(bp(2.0, 2.0), 1).unwrap();
        assert_eq!(e.b3, 0.0);
        assert!((e.r3 - FRAC_1_SQRT_2).abs() < 1e-12);
        for (p, q, n) in [(2.0, 2.0, 4), (1.0, 2.0, 2), (1.3, 4.0, 7), (5.0, 3.0, 64)] {
            let e = hilbert_extremal(bp(p, q), n).unwrap();
            assert!((e.boundary_identity() - 1.0).abs() < 1e-10, "{p} {q} {n}");
            assert!(
                (e.bohr_identity(bp(p, q)) - 1.0).abs() < 1e-10,
                "{p} {q} {n}"
            );
        }
    }

    #[test]
    fn polydisk_lower_examples() {
        assert!((polydisk_lower(1.0 / 3.0, 1).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((polydisk_lower(0.5, 2).unwrap() - 0.146_446_609_406_726_2).abs() < 1e-15);
        let n = 1_000_000;
        let ratio = polydisk_lower(0.4, n).unwrap() * n as f64 / 0.4;
        assert!((ratio - LN_2).abs() < 1e-6);
        assert!(polydisk_lower(0.0, 1).is_err());
        assert!(polydisk_lower(1.2, 1).is_err());
        assert!(polydisk_lower(0.5, 0).is_err());
    }

    #[test]
    fn asymptotic_reference_values() {
        assert!((finite_dim_asymptotic(8).unwrap() - 0.509_833_495_084_404_5).abs() < 1e-12);
        assert!((finite_dim_asymptotic(2).unwrap() - 0.588_705_011_257_737_3).abs() < 1e-12);
        assert!((finite_dim_asymptotic(100).unwrap() - 0.214_596_602_628_934_7).abs() < 1e-12);
        assert!(finite_dim_asymptotic(1).is_err());
    }

    #[test]
    fn p_bohr_lower_bounds() {
        assert!((pbohr_scalar_lower(1.0 + 1e-12, 0.3).unwrap() - 0.3).abs() < 1e-10);
        assert!((pbohr_scalar_lower(2.0 - 1e-12, 0.3).unwrap() - 1.0).abs() < 1e-10);
        assert!(
            (pbohr_scalar_lower(1.5, 1.0 / 3.0).unwrap() - 0.693_361_274_350_634_7).abs() < 1e-12
        );
        assert!(pbohr_scalar_lower(2.0, 0.5).is_err());
        assert!(pbohr_scalar_lower(1.5, 0.0).is_err());

        assert!((pbohr_vector_lower(PlConvexityConstant::hilbert()) - 0.2).abs() < 1e-15);
        let c = PlConvexityConstant::new(2.0, 4.0).unwrap();
        assert!((pbohr_vector_lower(c) - 0.5).abs() < 1e-15);
        let c = PlConvexityConstant::new(3.0, 1.0).unwrap();
        assert!((pbohr_vector_lower(c) - 0.231_120_424_783_544_9).abs() < 1e-12);
        assert!(PlConvexityConstant::new(1.5, 1.0).is_err());
        assert!(PlConvexityConstant::new(2.0, 0.0).is_err());
    }

    #[test]
    fn positive_real_radii() {
        assert!((hpn_exact(2.0).unwrap() - (3.0f64 / 7.0).sqrt()).abs() < 1e-15);
        assert!((hpn_exact(3.0).unwrap() - 0.775_655_590_483_520_6).abs() < 1e-12);
        assert!(hpn_exact(20.0).unwrap() > 0.96);
        assert!(hpn_exact(1.9).is_err());

        let h2 = hpn_exact(2.0).unwrap();
        assert!((hpn_lower_combine(1.0 + 1e-12, 0.3, h2).unwrap() - 0.3).abs() < 1e-10);
        assert!((hpn_lower_combine(2.0 - 1e-12, 0.3, h2).unwrap() - h2).abs() < 1e-10);
        // (1/3)^{1/3} (0.6546537)^{2/3}
        let v = hpn_lower_combine(1.5, 1.0 / 3.0, 0.654_653_7).unwrap();
        assert!((v - 0.522_757_974_168_337_4).abs() < 1e-12);
        assert!(hpn_lower_combine(0.9, 0.3, h2).is_err());
    }

    #[test]
    fn omega_condition_examples() {
        let deltas: Vec<f64> = (-6..=1).map(|k| 10f64.powi(k)).collect();
        let hilbert = OmegaSamples::tabulate(&deltas, |d| (2.0 * d + d * d).sqrt()).unwrap();
        let check = omega_condition_check(bp(2.0, 2.0), &hilbert).unwrap();
        assert!(check.holds);
        match check.c_est {
            OmegaConstant::Finite(c) => assert!((c - 1.0).abs() < 1e-9),
            OmegaConstant::Divergent => panic!("Hilbert omega must be bounded"),
        }

        let deltas: Vec<f64> = (-12..=1).map(|k| 10f64.powi(k)).collect();
        let samples = OmegaSamples::tabulate(&deltas, |d| (2.0 * d + d * d).sqrt()).unwrap();
        let check = omega_condition_check(bp(2.0, 1.5), &samples).unwrap();
        assert!(!check.holds);
        assert_eq!(check.c_est, OmegaConstant::Divergent);

        let zero = OmegaSamples::tabulate(&[0.0, 0.5, 2.0], |_| 0.0).unwrap();
        let check = omega_condition_check(bp(1.3, 2.7), &zero).unwrap();
        assert!(check.holds);
        assert_eq!(check.c_est, OmegaConstant::Finite(0.0));
    }

    #[test]
    fn omega_rejects_bad_samples() {
        let bad = OmegaSamples::new(vec![(0.0, 0.1), (1.0, 1.0)]).unwrap();
        assert!(matches!(
            omega_condition_check(bp(2.0, 2.0), &bad),
            Err(BohrError::InvalidSamples(_))
        ));
        assert!(OmegaSamples::new(vec![]).is_err());
        assert!(OmegaSamples::new(vec![(1.0, 1.0), (1.0, 2.0)]).is_err());
        assert!(OmegaSamples::new(vec![(1.0, -1.0)]).is_err());
    }

    #[test]
    fn frechet_lower_examples() {
        assert!((frechet_lower(1.0 / 3.0).unwrap() - 0.061_313_240_195_240_39).abs() < 1e-15);
        assert!((frechet_lower(FRAC_1_SQRT_2).unwrap() - 0.130_065_023_755_722_2).abs() < 1e-15);
        assert!(frechet_lower(1e-300).unwrap() < 1e-299);
        assert!(frechet_lower(0.0).is_err());
    }
}
