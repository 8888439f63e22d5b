//! Lower bounds for the p-Bohr radius, scalar and vector valued.

use bohr_radius::multidim::{pbohr_scalar_lower, pbohr_vector_lower, PlConvexityConstant};

fn main() -> bohr_radius::Result<()> {
    for p in [1.1, 1.5, 1.9] {
        println!("r_{p}^1(C) >= {:.12}", pbohr_scalar_lower(p, 1.0 / 3.0)?);
    }
    println!(
        "Hilbert space: r_2^n >= {}",
        pbohr_vector_lower(PlConvexityConstant::hilbert())
    );
    for (p, ip) in [(2.0, 4.0), (3.0, 1.0), (4.0, 0.5)] {
        let c = PlConvexityConstant::new(p, ip)?;
        println!("p={p} I_p={ip}: r_p^n(X) >= {:.12}", pbohr_vector_lower(c));
    }
    Ok(())
}
