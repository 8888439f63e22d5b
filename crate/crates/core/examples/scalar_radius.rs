//! Exact scalar radii and the certified interval where no closed form exists.

use bohr_radius::{radius_scalar, BohrParams, RadiusValue};

fn main() -> bohr_radius::Result<()> {
    for (p, q) in [
        (1.0, 1.0),
        (1.5, 1.0),
        (2.0, 2.0),
        (2.0, 5.0),
        (4.0, 2.0),
        (1.0, 3.0),
    ] {
        let r = radius_scalar(BohrParams::new(p, q)?);
        match r.value {
            RadiusValue::Exact(v) => println!("R_{{{p},{q}}} = {v:.12}  [{}]", r.case),
            RadiusValue::Interval { lo, hi } => {
                println!("R_{{{p},{q}}} in [{lo:.12}, {hi:.12}]  [{}]", r.case)
            }
        }
    }
    Ok(())
}
