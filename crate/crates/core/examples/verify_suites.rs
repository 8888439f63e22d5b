//! Runs every verification suite and prints its JSON report.

use bohr_radius::harness::{run_suite, Suite};

fn main() -> bohr_radius::Result<()> {
    for suite in Suite::MEMBERS {
        let report = run_suite(suite, 1, 100)?;
        println!("{}", report.to_json());
    }
    Ok(())
}
