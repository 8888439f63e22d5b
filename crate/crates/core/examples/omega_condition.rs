//! Sampled growth check of the modulus `Omega_X` against the `(p, q)` gauge.

use bohr_radius::multidim::{omega_condition_check, OmegaSamples};
use bohr_radius::BohrParams;

fn main() -> bohr_radius::Result<()> {
    let deltas: Vec<f64> = (-6..=2).map(|k| 10f64.powi(k)).collect();
    let hilbert = OmegaSamples::tabulate(&deltas, |d| (2.0 * d + d * d).sqrt())?;
    let rough = OmegaSamples::tabulate(&deltas, |d| d.powf(1.0 / 3.0))?;
    for (name, samples) in [("hilbert", &hilbert), ("cube root", &rough)] {
        for (p, q) in [(2.0, 2.0), (2.0, 4.0)] {
            let check = omega_condition_check(BohrParams::new(p, q)?, samples)?;
            println!(
                "{name:>9} p={p} q={q}: holds {} c_est {:?}",
                check.holds, check.c_est
            );
        }
    }
    Ok(())
}
