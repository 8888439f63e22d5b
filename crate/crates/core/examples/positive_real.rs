//! `H_p^n` for functions with positive real part: exact for p >= 2, bracketed below.

use bohr_radius::multidim::{half_plane_radius, hpn_exact, hpn_lower_combine};
use bohr_radius::oracle::{radius_of, FunctionFamily, Functional};

fn main() -> bohr_radius::Result<()> {
    for p in [2.0, 3.0, 4.0, 20.0] {
        let oracle = radius_of(&FunctionFamily::HalfPlane, Functional::Hp(p))?;
        println!("H_{p} = {:.12}  oracle {oracle:.12}", hpn_exact(p)?);
    }
    let h2 = hpn_exact(2.0)?;
    for p in [1.25, 1.5, 1.75] {
        let lo = hpn_lower_combine(p, 1.0 / 3.0, h2)?;
        println!("H_{p}^1 in [{lo:.12}, {:.12}]", half_plane_radius(p));
    }
    Ok(())
}
