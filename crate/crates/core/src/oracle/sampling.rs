//! Seeded sampling of Schur-class and Carathéodory-class functions.
//!
//! The generator is ChaCha8 (`rand_chacha`) seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, whose output stream is fixed across
//! platforms. Batches derive per-sample seeds with [`split_seed`]: sample `i`
//! of a batch with seed `s` uses the first 64-bit word of ChaCha8 stream `i`
//! under seed `s`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_domain, Result};
use crate::oracle::family::FunctionFamily;
use crate::oracle::series::{series_div, PowerSeries1D, Tail};

/// Zeros of sampled Blaschke products lie in `|z| <= SAMPLE_ZERO_RADIUS`.
pub const SAMPLE_ZERO_RADIUS: f64 = 0.95;

/// Independent per-sample seed for sample `index` of a batch.
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.next_u64()
}

/// Random finite Blaschke product: degree uniform in `1..=max_degree`, zeros
/// uniform (by area) in the disk of radius 0.95, uniform unimodular phase.
pub fn sample_schur(seed: u64, max_degree: usize) -> Result<FunctionFamily> {
    check_domain("max_degree", max_degree as f64, max_degree >= 1, ">= 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degree = rng.random_range(1..=max_degree);
    let zeros = (0..degree)
        .map(|_| {
            let radius = SAMPLE_ZERO_RADIUS * rng.random::<f64>().sqrt();
            Complex64::from_polar(radius, TAU * rng.random::<f64>())
        })
        .collect();
    let phase = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
    Ok(FunctionFamily::Blaschke { zeros, phase })
}

pub fn sample_schur_batch(
    seed: u64,
    count: usize,
    max_degree: usize,
) -> Result<Vec<FunctionFamily>> {
    (0..count as u64)
        .map(|i| sample_schur(split_seed(seed, i), max_degree))
        .collect()
}

/// Coefficient moduli of `(1 + ψ)/(1 - ψ)` for `ψ(0) = 0`, `|ψ| <= 1`; the
/// result has positive real part and value 1 at the origin, so `|c_k| <= 2`.
pub fn herglotz_series(psi: &[Complex64], k: usize) -> Result<PowerSeries1D> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if psi.first().is_some_and(|c| c.norm() != 0.0) {
        return Err(crate::error::BohrError::Precondition(
            "Herglotz transform needs psi(0) = 0".into(),
        ));
    }
    let mut num = vec![one];
    let mut den = vec![one];
    for (i, c) in psi.iter().enumerate().skip(1) {
        if num.len() <= i {
            num.resize(i + 1, zero);
            den.resize(i + 1, zero);
        }
        num[i] += c;
        den[i] -= c;
    }
    let coeffs = series_div(&num, &den, k + 1)?;
    PowerSeries1D::new(
        coeffs.iter().map(|c| c.norm()).collect(),
        Tail::SchurTail {
            bound: 2.0,
            decay: None,
        },
    )
}

/// Carathéodory-class sample: the Herglotz transform of `ψ = z B(z)` where
/// `B = sample_schur(seed, max_degree)`, truncated at order `k`.
pub fn sample_caratheodory(seed: u64, max_degree: usize, k: usize) -> Result<PowerSeries1D> {
    let blaschke = sample_schur(seed, max_degree)?;
    let mut psi = vec![Complex64::new(0.0, 0.0)];
    psi.extend(blaschke.complex_coefficients(k)?);
    herglotz_series(&psi, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::quantity::p_bohr_quantity;

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_schur(7, 5).unwrap(), sample_schur(7, 5).unwrap());
        assert_ne!(sample_schur(7, 5).unwrap(), sample_schur(8, 5).unwrap());
        assert_eq!(split_seed(3, 9), split_seed(3, 9));
        assert_ne!(split_seed(3, 9), split_seed(3, 10));
        assert!(sample_schur(1, 0).is_err());
    }

    #[test]
    fn sampled_zeros_respect_radius() {
        for f in sample_schur_batch(11, 50, 6).unwrap() {
            if let FunctionFamily::Blaschke { zeros, phase } = f {
                assert!(!zeros.is_empty() && zeros.len() <= 6);
                assert!(zeros.iter().all(|z| z.norm() <= SAMPLE_ZERO_RADIUS));
                assert!((phase.norm() - 1.0).abs() < 1e-12);
            } else {
                panic!("expected a Blaschke product");
            }
        }
    }

    #[test]
    fn schur_samples_obey_parseval_and_coefficient_bound() {
        for f in sample_schur_batch(5, 40, 6).unwrap() {
            let s = f.series_at(0.99).unwrap();
            assert!(p_bohr_quantity(&s, 2.0, 0.99).unwrap().value <= 1.0 + 1e-9);
            assert!(s.moduli().iter().all(|&m| m <= 1.0 + 1e-9));
        }
    }

    #[test]
    fn herglotz_edge_cases() {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let constant = herglotz_series(&[zero], 5).unwrap();
        assert_eq!(constant.moduli(), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let half_plane = herglotz_series(&[zero, one], 5).unwrap();
        assert_eq!(half_plane.moduli(), &[1.0, 2.0, 2.0, 2.0, 2.0, 2.0]);
        assert!(herglotz_series(&[one], 3).is_err());
    }

    #[test]
    fn caratheodory_coefficients_bounded_by_two() {
        for i in 0..50 {
            let s = sample_caratheodory(split_seed(2, i), 5, 200).unwrap();
            assert_eq!(s.head(), 1.0);
            assert!(s.moduli().iter().all(|&m| m <= 2.0 + 1e-9));
        }
    }
}
