//! Random finite Blaschke products never exceed the exact radius bound.

use bohr_radius::oracle::{bohr_quantity, sample_schur_batch};
use bohr_radius::{radius_scalar, BohrParams};

fn main() -> bohr_radius::Result<()> {
    let samples = sample_schur_batch(7, 200, 6)?;
    for (p, q) in [(1.0, 1.0), (2.0, 1.0), (3.0, 3.0)] {
        let params = BohrParams::new(p, q)?;
        let r = radius_scalar(params).exact_value().expect("exact case");
        let mut worst = 0.0f64;
        for f in &samples {
            worst = worst.max(bohr_quantity(&f.series_at(r)?, params, r)?.value);
        }
        println!("p={p} q={q}: R={r:.9}, largest Bohr quantity over 200 samples {worst:.9}");
    }
    Ok(())
}
