//! Herglotz transforms of Schur functions and the `H_p` functional at `H_p^n`.

use bohr_radius::multidim::hpn_exact;
use bohr_radius::oracle::{h_quantity, sample_caratheodory, split_seed};

fn main() -> bohr_radius::Result<()> {
    let order = 400;
    for i in 0..5 {
        let s = sample_caratheodory(split_seed(11, i), 6, order)?;
        let max = s.moduli().iter().copied().fold(0.0, f64::max);
        let h: Vec<String> = [2.0, 3.0, 4.0]
            .iter()
            .map(|&p| Ok(format!("{:.6}", h_quantity(&s, p, hpn_exact(p)?)?.value)))
            .collect::<bohr_radius::Result<_>>()?;
        println!(
            "sample {i}: max |c_k| = {max:.6}, H_p quantity at p=2,3,4: {}",
            h.join(" ")
        );
    }
    Ok(())
}
