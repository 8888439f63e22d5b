//! A `(p, q)` sweep written as CSV to stdout, ready for plotting.

use bohr_radius::output::{sweep_grid, write_sweep_csv};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let records = sweep_grid("1:3".parse()?, "1:4".parse()?, 0.25)?;
    write_sweep_csv(&records, std::io::stdout().lock())?;
    Ok(())
}
