//! Concrete holomorphic families with closed-form or recursive coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{BohrError, Result};
use crate::multidim::HilbertExtremal;
use crate::oracle::series::{
    poly_mul, series_div, Geometric, HomogeneousSums, PowerSeries1D, Tail, MAX_TERMS, TAIL_TOL,
};

/// Order used for families whose tail is summed in closed form.
const EXACT_TAIL_ORDER: usize = 64;
const PHASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FunctionFamily {
    /// `φ_a(z) = (a - z)/(1 - a z)`, `a ∈ [0, 1)`.
    Mobius(f64),
    /// `z φ_a(z)`.
    ZMobius(f64),
    /// `phase * Π (a_i - z)/(1 - conj(a_i) z)`.
    Blaschke {
        zeros: Vec<Complex64>,
        phase: Complex64,
    },
    /// `(1 + z)/(1 - z)`, positive real part, value 1 at the origin.
    HalfPlane,
    /// The extremal Hilbert-space valued map on `D^n`, seen through its
    /// diagonal norm series.
    HilbertChi(HilbertExtremal),
    /// `c` with `|c| < 1`.
    Constant(f64),
}

impl FunctionFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(BohrError::InvalidFamily(msg));
        match self {
            FunctionFamily::Mobius(a) | FunctionFamily::ZMobius(a) => {
                if !(0.0..1.0).contains(a) {
                    return bad(format!("Mobius parameter {a} not in [0, 1)"));
                }
            }
            FunctionFamily::Blaschke { zeros, phase } => {
                if let Some(z) = zeros.iter().find(|z| z.norm().is_nan() || z.norm() >= 1.0) {
                    return bad(format!("Blaschke zero {z} not in the open disk"));
                }
                if (phase.norm() - 1.0).abs().is_nan() || (phase.norm() - 1.0).abs() > PHASE_TOL {
                    return bad(format!("Blaschke phase {phase} is not unimodular"));
                }
            }
            FunctionFamily::HalfPlane => {}
            FunctionFamily::HilbertChi(e) => {
                let ok = (0.0..1.0).contains(&e.b3)
                    && e.r3 > 0.0
                    && e.r3 < 1.0
                    && e.scale_c > 0.0
                    && e.n >= 1;
                if !ok {
                    return bad(format!("extremal data out of range: {e:?}"));
                }
            }
            FunctionFamily::Constant(c) => {
                if c.is_nan() || c.abs() >= 1.0 {
                    return bad(format!("constant {c} must satisfy |c| < 1"));
                }
            }
        }
        Ok(())
    }

    /// Complex Taylor coefficients `c_0..c_{terms-1}` of one-variable families.
    pub fn complex_coefficients(&self, terms: usize) -> Result<Vec<Complex64>> {
        self.validate()?;
        let re = |x: f64| Complex64::new(x, 0.0);
        let one = re(1.0);
        match self {
            FunctionFamily::Mobius(a) => series_div(&[re(*a), -one], &[one, re(-a)], terms),
            FunctionFamily::ZMobius(a) => {
                let mut c = vec![re(0.0)];
                c.extend(series_div(
                    &[re(*a), -one],
                    &[one, re(-a)],
                    terms.saturating_sub(1),
                )?);
                c.truncate(terms);
                Ok(c)
            }
            FunctionFamily::Blaschke { zeros, phase } => {
                let (num, den) = blaschke_polys(zeros, *phase);
                series_div(&num, &den, terms)
            }
            FunctionFamily::HalfPlane => series_div(&[one, one], &[one, -one], terms),
            FunctionFamily::Constant(c) => {
                let mut v = vec![re(0.0); terms];
                if let Some(first) = v.first_mut() {
                    *first = re(*c);
                }
                Ok(v)
            }
            FunctionFamily::HilbertChi(_) => Err(BohrError::InvalidFamily(
                "the Hilbert extremal map is vector valued; use coefficients()".into(),
            )),
        }
    }

    /// Coefficient moduli `|c_0|..|c_K|` with a tail bound.
    pub fn coefficients(&self, k: usize) -> Result<PowerSeries1D> {
        self.validate()?;
        if k == 0 {
            return Err(BohrError::Precondition(
                "truncation order K must be >= 1".into(),
            ));
        }
        match self {
            FunctionFamily::Mobius(a) => {
                let a = *a;
                let b = 1.0 - a * a;
                let mut moduli = Vec::with_capacity(k + 1);
                moduli.push(a);
                moduli.extend((1..=k).map(|n| b * a.powi(n as i32 - 1)));
                let tail = Tail::ExactGeometric(Geometric {
                    ratio: a,
                    scale: b * a.powi(k as i32),
                });
                PowerSeries1D::new(moduli, tail)
            }
            FunctionFamily::ZMobius(a) => {
                let a = *a;
                let b = 1.0 - a * a;
                let mut moduli = Vec::with_capacity(k + 1);
                moduli.push(0.0);
                moduli.push(a);
                moduli.extend((2..=k).map(|n| b * a.powi(n as i32 - 2)));
                let tail = Tail::ExactGeometric(Geometric {
                    ratio: a,
                    scale: b * a.powi(k as i32 - 1),
                });
                PowerSeries1D::new(moduli, tail)
            }
            FunctionFamily::Blaschke { zeros, .. } => {
                let moduli = self
                    .complex_coefficients(k + 1)?
                    .iter()
                    .map(|z| z.norm())
                    .collect();
                let tail = match cauchy_decay(zeros) {
                    None => Tail::Zero,
                    Some(CauchyDecay { radius, bound }) => Tail::SchurTail {
                        bound: 1.0,
                        decay: Some(Geometric {
                            ratio: 1.0 / radius,
                            scale: bound * radius.powf(-((k + 1) as f64)),
                        }),
                    },
                };
                PowerSeries1D::new(moduli, tail)
            }
            FunctionFamily::HalfPlane => {
                let mut moduli = vec![2.0; k + 1];
                moduli[0] = 1.0;
                PowerSeries1D::new(
                    moduli,
                    Tail::SchurTail {
                        bound: 2.0,
                        decay: None,
                    },
                )
            }
            FunctionFamily::HilbertChi(e) => {
                let (sums, tail) = chi_sums(e, k)?;
                HomogeneousSums::new(e.b3, sums, tail).map(|h| h.diagonal_series())
            }
            FunctionFamily::Constant(c) => PowerSeries1D::new(vec![c.abs()], Tail::Zero),
        }
    }

    /// Homogeneous norm sums on `D^n`. One-variable families are their own
    /// homogeneous expansion (`s_k = |c_k|`).
    pub fn homogeneous_sums(&self, k: usize) -> Result<HomogeneousSums> {
        let s = self.coefficients(k)?;
        HomogeneousSums::new(s.head(), s.moduli()[1..].to_vec(), *s.tail())
    }

    /// Truncation order pushing the tail at `r` below [`TAIL_TOL`].
    pub fn terms_for(&self, r: f64) -> Result<usize> {
        self.validate()?;
        if !(0.0..1.0).contains(&r) {
            return Err(BohrError::TailUnbounded {
                r,
                reason: "r must lie in [0, 1)".into(),
            });
        }
        let order = match self {
            FunctionFamily::Mobius(_) | FunctionFamily::ZMobius(_) => EXACT_TAIL_ORDER,
            FunctionFamily::Constant(_) => 1,
            FunctionFamily::HalfPlane => flat_order(2.0, r),
            FunctionFamily::Blaschke { zeros, .. } => match cauchy_decay(zeros) {
                None => zeros.len().max(1),
                Some(d) => flat_order(1.0, r).min(geometric_order(d.bound, 1.0 / d.radius, r)),
            },
            FunctionFamily::HilbertChi(e) => chi_order(e, r),
        };
        let order = order.max(1);
        if order > MAX_TERMS {
            return Err(BohrError::TailUnbounded {
                r,
                reason: format!("needs {order} terms, more than the cap of {MAX_TERMS}"),
            });
        }
        Ok(order)
    }

    /// Series truncated for evaluation at `r`.
    pub fn series_at(&self, r: f64) -> Result<PowerSeries1D> {
        self.coefficients(self.terms_for(r)?)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FunctionFamily::Mobius(_) => "mobius",
            FunctionFamily::ZMobius(_) => "zmobius",
            FunctionFamily::Blaschke { .. } => "blaschke",
            FunctionFamily::HalfPlane => "halfplane",
            FunctionFamily::HilbertChi(_) => "hilbert-chi",
            FunctionFamily::Constant(_) => "constant",
        }
    }
}

fn blaschke_polys(zeros: &[Complex64], phase: Complex64) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut num = vec![phase];
    let mut den = vec![Complex64::new(1.0, 0.0)];
    for a in zeros {
        num = poly_mul(&num, &[*a, Complex64::new(-1.0, 0.0)]);
        den = poly_mul(&den, &[Complex64::new(1.0, 0.0), -a.conj()]);
    }
    (num, den)
}

/// `|c_n| <= bound * radius^{-n}` from the maximum modulus on `|z| = radius > 1`.
struct CauchyDecay {
    radius: f64,
    bound: f64,
}

fn cauchy_decay(zeros: &[Complex64]) -> Option<CauchyDecay> {
    let rho = zeros.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if rho == 0.0 {
        // phase * (-z)^d is a polynomial
        return None;
    }
    let radius = 1.0 / rho.sqrt();
    let bound = zeros
        .iter()
        .map(|z| {
            let m = z.norm();
            (radius + m) / (1.0 - m * radius)
        })
        .product();
    Some(CauchyDecay { radius, bound })
}

/// Smallest `K` with `bound r^{K+1}/(1-r) <= TAIL_TOL`.
fn flat_order(bound: f64, r: f64) -> usize {
    if r == 0.0 {
        return 1;
    }
    let need = (TAIL_TOL * (1.0 - r) / bound).ln() / r.ln();
    order_from(need)
}

/// Smallest `K` with `bound (ρ r)^{K+1}/(1-ρ r) <= TAIL_TOL` for `|c_n| <= bound ρ^n`.
fn geometric_order(bound: f64, rho: f64, r: f64) -> usize {
    let t = rho * r;
    if t == 0.0 {
        return 1;
    }
    if t >= 1.0 {
        return usize::MAX;
    }
    let need = (TAIL_TOL * (1.0 - t) / bound).ln() / t.ln();
    order_from(need)
}

fn order_from(need_plus_one: f64) -> usize {
    if !need_plus_one.is_finite() || need_plus_one > MAX_TERMS as f64 * 4.0 {
        return usize::MAX;
    }
    (need_plus_one.ceil().max(1.0) as usize)
        .saturating_sub(1)
        .max(1)
}

/// `t_k = r3^k C(n+k-1, k)` for `k = 1..=k_max`, built by ratios to avoid overflow.
fn chi_weights(e: &HilbertExtremal, k_max: usize) -> Vec<f64> {
    let n = e.n as f64;
    let mut out = Vec::with_capacity(k_max);
    let mut t = 1.0;
    for k in 1..=k_max {
        t *= e.r3 * (n + k as f64 - 1.0) / k as f64;
        out.push(t);
    }
    out
}

fn chi_tail_ratio(e: &HilbertExtremal, k: usize) -> f64 {
    // s_{j+1}/s_j = r3 (n+j)/(j+1), decreasing in j; bound it at j = K+1
    e.r3 * (e.n + k + 1) as f64 / (k + 2) as f64
}

fn chi_sums(e: &HilbertExtremal, k: usize) -> Result<(Vec<f64>, Tail)> {
    let weights = chi_weights(e, k + 1);
    let sums: Vec<f64> = weights[..k].iter().map(|w| e.scale_c * w).collect();
    let ratio = chi_tail_ratio(e, k);
    if ratio >= 1.0 {
        return Err(BohrError::Precondition(format!(
            "truncation order {k} too small for a geometric tail bound (ratio {ratio})"
        )));
    }
    let tail = Tail::GeometricBound(Geometric {
        ratio,
        scale: e.scale_c * weights[k],
    });
    Ok((sums, tail))
}

fn chi_order(e: &HilbertExtremal, r: f64) -> usize {
    let n = e.n as f64;
    let mut t = 1.0;
    for k in 1..=MAX_TERMS {
        // t = r3^k C(n+k-1, k); next is the first weight past order k
        t *= e.r3 * (n + k as f64 - 1.0) / k as f64;
        let next = t * e.r3 * (n + k as f64) / (k + 1) as f64;
        let ratio = chi_tail_ratio(e, k) * r;
        if ratio < 1.0 {
            let tail = e.scale_c * next * r.powi(k as i32 + 1) / (1.0 - ratio);
            if tail <= TAIL_TOL {
                return k;
            }
        }
    }
    usize::MAX
}
