//! Which branch handles a given `(p, q)` and what the crossover test says.

use bohr_radius::{crossover_condition, inf_a, inf_s, radius_scalar_via, BohrParams, CaseTag};

fn main() -> bohr_radius::Result<()> {
    for (p, q) in [(1.0, 3.0), (1.8, 2.5), (2.0, 2.0), (4.0, 2.0)] {
        let params = BohrParams::new(p, q)?;
        let c = crossover_condition(params);
        println!(
            "p={p} q={q}: a_hat={:.6} condition {} (lhs {:.6}, rhs {:.6})",
            c.a_hat, c.holds, c.lhs, c.rhs
        );
        println!(
            "  inf A = {:.9} at {}",
            inf_a(params).value,
            inf_a(params).argmin
        );
        println!(
            "  inf S = {:.9} at {}",
            inf_s(params).value,
            inf_s(params).argmin
        );
        for case in CaseTag::ALL.into_iter().filter(|c| c.applies_to(params)) {
            let r = radius_scalar_via(params, case)?;
            println!("  via {case}: {:?}", r.value);
        }
    }
    Ok(())
}
