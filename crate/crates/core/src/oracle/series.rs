//! Truncated coefficient-modulus sequences with explicit tail bounds.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{BohrError, Result};

/// Tail bounds must push the truncation error below this.
pub const TAIL_TOL: f64 = 1e-12;
/// Largest truncation order the oracle will build.
pub const MAX_TERMS: usize = 100_000;

/// Geometric coefficient profile past the truncation order `K`:
/// `|c_{K+1+j}| <= scale * ratio^j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometric {
    pub ratio: f64,
    pub scale: f64,
}

impl Geometric {
    /// `Σ_{j>=0} (scale ratio^j)^p r^{p(K+1+j)}`.
    fn power_sum(&self, k: usize, r: f64, p: f64) -> Result<f64> {
        let step = (self.ratio * r).powf(p);
        if step >= 1.0 {
            return Err(BohrError::TailUnbounded {
                r,
                reason: format!("geometric ratio {} times r is not below 1", self.ratio),
            });
        }
        if self.scale == 0.0 {
            return Ok(0.0);
        }
        Ok(self.scale.powf(p) * r.powf(p * (k + 1) as f64) / (1.0 - step))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Tail {
    /// The series terminates at `K`.
    Zero,
    /// `|c_{K+1+j}| = scale * ratio^j` exactly.
    ExactGeometric(Geometric),
    /// `|c_{K+1+j}| <= scale * ratio^j`.
    GeometricBound(Geometric),
    /// `|c_n| <= bound` for all `n > K`, optionally sharpened by a geometric
    /// decay (a Cauchy estimate on a larger circle).
    SchurTail {
        bound: f64,
        decay: Option<Geometric>,
    },
}

impl Tail {
    /// Upper bound for `Σ_{n>K} |c_n|^p r^{np}` (exact for [`Tail::ExactGeometric`]).
    pub fn power_sum(&self, k: usize, r: f64, p: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(BohrError::TailUnbounded {
                r,
                reason: "r must lie in [0, 1)".into(),
            });
        }
        if r == 0.0 {
            return Ok(0.0);
        }
        match *self {
            Tail::Zero => Ok(0.0),
            Tail::ExactGeometric(g) | Tail::GeometricBound(g) => g.power_sum(k, r, p),
            Tail::SchurTail { bound, decay } => {
                let rp = r.powf(p);
                let flat = bound.powf(p) * r.powf(p * (k + 1) as f64) / (1.0 - rp);
                match decay.map(|g| g.power_sum(k, r, p)) {
                    Some(Ok(d)) => Ok(flat.min(d)),
                    _ => Ok(flat),
                }
            }
        }
    }

    pub fn sum(&self, k: usize, r: f64) -> Result<f64> {
        self.power_sum(k, r, 1.0)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Tail::Zero | Tail::ExactGeometric(_))
    }
}

/// `|c_0|, ..., |c_K|` of a one-variable power series plus a tail descriptor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries1D {
    moduli: Vec<f64>,
    tail: Tail,
}

impl PowerSeries1D {
    pub fn new(moduli: Vec<f64>, tail: Tail) -> Result<Self> {
        if moduli.is_empty() {
            return Err(BohrError::InvalidFamily("series needs at least c_0".into()));
        }
        if let Some(bad) = moduli.iter().find(|m| !(m.is_finite() && **m >= 0.0)) {
            return Err(BohrError::InvalidFamily(format!(
                "coefficient modulus {bad} is not a finite nonnegative real"
            )));
        }
        match tail {
            Tail::ExactGeometric(g) | Tail::GeometricBound(g)
                if !(g.ratio >= 0.0 && g.ratio < 1.0 && g.scale >= 0.0) =>
            {
                return Err(BohrError::InvalidFamily(format!(
                    "geometric tail needs 0 <= ratio < 1 and scale >= 0, got {g:?}"
                )));
            }
            Tail::SchurTail { bound, .. } if !(bound >= 0.0 && bound.is_finite()) => {
                return Err(BohrError::InvalidFamily(format!("bad Schur bound {bound}")));
            }
            _ => {}
        }
        Ok(Self { moduli, tail })
    }

    pub fn moduli(&self) -> &[f64] {
        &self.moduli
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.moduli.len() - 1
    }

    pub fn head(&self) -> f64 {
        self.moduli[0]
    }
}

/// Norm sums of the homogeneous parts of a map on `D^n`:
/// `head = ‖x_0‖`, `sums[k-1] = Σ_{|α|=k} ‖x_α‖`.
///
/// For families with nonnegative coefficients the supremum over `ρD^n` of the
/// majorant series sits on the diagonal, where it equals `Σ_k s_k ρ^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomogeneousSums {
    pub head: f64,
    pub sums: Vec<f64>,
    pub tail: Tail,
}

impl HomogeneousSums {
    pub fn new(head: f64, sums: Vec<f64>, tail: Tail) -> Result<Self> {
        Self::diagonal_parts(head, &sums, tail)?;
        Ok(Self { head, sums, tail })
    }

    fn diagonal_parts(head: f64, sums: &[f64], tail: Tail) -> Result<PowerSeries1D> {
        let mut moduli = Vec::with_capacity(sums.len() + 1);
        moduli.push(head);
        moduli.extend_from_slice(sums);
        PowerSeries1D::new(moduli, tail)
    }

    /// The one-variable majorant `u ↦ head + Σ s_k u^k`.
    pub fn diagonal_series(&self) -> PowerSeries1D {
        Self::diagonal_parts(self.head, &self.sums, self.tail).expect("validated at construction")
    }
}

/// Compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct ComplexKahan {
    re: KahanSum,
    im: KahanSum,
}

impl ComplexKahan {
    fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Product of two polynomials given by ascending coefficients.
pub fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// First `terms` coefficients of `num / den` by power-series long division.
/// Requires `den[0] != 0`.
pub fn series_div(num: &[Complex64], den: &[Complex64], terms: usize) -> Result<Vec<Complex64>> {
    let d0 = *den
        .first()
        .ok_or_else(|| BohrError::InvalidFamily("empty denominator".into()))?;
    if d0.norm() == 0.0 {
        return Err(BohrError::InvalidFamily(
            "denominator vanishes at the origin".into(),
        ));
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut out: Vec<Complex64> = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut acc = ComplexKahan::default();
        acc.add(num.get(n).copied().unwrap_or(zero));
        for j in 1..den.len().min(n + 1) {
            acc.add(-den[j] * out[n - j]);
        }
        out.push(acc.value() / d0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn long_division_of_mobius_matches_closed_form() {
        let a = 0.5;
        let coeffs = series_div(&[c(a), c(-1.0)], &[c(1.0), c(-a)], 6).unwrap();
        let moduli: Vec<f64> = coeffs.iter().map(|z| z.norm()).collect();
        assert!((moduli[0] - 0.5).abs() < 1e-15);
        for (n, m) in moduli.iter().enumerate().skip(1) {
            let want = (1.0 - a * a) * a.powi(n as i32 - 1);
            assert!((m - want).abs() < 1e-15);
        }
    }

    #[test]
    fn division_by_one_minus_z_is_partial_sums() {
        let out = series_div(&[c(1.0), c(1.0)], &[c(1.0), c(-1.0)], 5).unwrap();
        let re: Vec<f64> = out.iter().map(|z| z.re).collect();
        assert_eq!(re, vec![1.0, 2.0, 2.0, 2.0, 2.0]);
        assert!(series_div(&[c(1.0)], &[c(0.0), c(1.0)], 3).is_err());
    }

    #[test]
    fn tail_sums() {
        let g = Geometric {
            ratio: 0.5,
            scale: 0.25,
        };
        // Σ_{j} 0.25 * 0.5^j r^{3+j} at K = 2, r = 0.5
        let s = Tail::ExactGeometric(g).sum(2, 0.5).unwrap();
        assert!((s - 0.25 * 0.125 / 0.75).abs() < 1e-16);
        let schur = Tail::SchurTail {
            bound: 2.0,
            decay: None,
        };
        assert!((schur.sum(0, 0.5).unwrap() - 2.0).abs() < 1e-15);
        assert!(schur.sum(0, 1.0).is_err());
        let steep = Tail::GeometricBound(Geometric {
            ratio: 0.9,
            scale: 1.0,
        });
        assert!(steep.sum(3, 0.5).is_ok());
        assert_eq!(Tail::Zero.sum(4, 0.99).unwrap(), 0.0);
    }

    #[test]
    fn rejects_invalid_series() {
        assert!(PowerSeries1D::new(vec![], Tail::Zero).is_err());
        assert!(PowerSeries1D::new(vec![0.5, -0.1], Tail::Zero).is_err());
        let bad = Tail::ExactGeometric(Geometric {
            ratio: 1.0,
            scale: 1.0,
        });
        assert!(PowerSeries1D::new(vec![0.5], bad).is_err());
    }

    #[test]
    fn kahan_recovers_small_terms() {
        let mut terms = vec![1.0];
        terms.extend(std::iter::repeat_n(1e-16, 10_000));
        let k: KahanSum = terms.iter().copied().collect();
        assert!((k.value() - (1.0 + 1e-12)).abs() < 1e-15);
    }
}
