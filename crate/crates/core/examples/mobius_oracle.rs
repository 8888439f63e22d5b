//! The series oracle recovers `A(a)` as the radius of a disk automorphism.

use bohr_radius::oracle::{bohr_quantity, radius_of, FunctionFamily, Functional};
use bohr_radius::{eval_a, BohrParams};

fn main() -> bohr_radius::Result<()> {
    let params = BohrParams::new(1.5, 2.0)?;
    for a in [0.1, 0.4, 0.7, 0.95] {
        let family = FunctionFamily::Mobius(a);
        let r = radius_of(&family, Functional::Rpq(params))?;
        let at_r = bohr_quantity(&family.series_at(r)?, params, r)?;
        println!(
            "a={a}: oracle {r:.12}  A(a) {:.12}  quantity {:.12} (tail {:.1e}, {} terms)",
            eval_a(params, a)?,
            at_r.value,
            at_r.tail_error,
            family.terms_for(r)?
        );
    }
    Ok(())
}
