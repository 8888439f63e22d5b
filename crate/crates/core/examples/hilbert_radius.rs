//! Hilbert-space radius on the polydisk and the extremal function that attains it.

use bohr_radius::multidim::{finite_dim_asymptotic, hilbert_extremal, hilbert_radius};
use bohr_radius::BohrParams;

fn main() -> bohr_radius::Result<()> {
    let params = BohrParams::new(1.5, 3.0)?;
    println!("{:>6} {:>14} {:>14}", "n", "R^n", "sqrt(ln n/n)");
    for n in [1usize, 2, 4, 8, 64, 512, 1024] {
        let h = hilbert_radius(params, n)?;
        let reference = if n > 1 {
            finite_dim_asymptotic(n)?
        } else {
            f64::NAN
        };
        println!("{n:>6} {:>14.10} {reference:>14.10}", h.value);
    }

    let e = hilbert_extremal(params, 4)?;
    println!(
        "extremal n=4: b3={:.6} r3={:.6} c={:.6}; boundary {:.12}, bohr {:.12}",
        e.b3,
        e.r3,
        e.scale_c,
        e.boundary_identity(),
        e.bohr_identity(params)
    );
    Ok(())
}
