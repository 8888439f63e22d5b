//! Generalized Bohr radii of bounded holomorphic functions.
//!
//! * [`radius`]: exact `R_{p,q}(C)` by case analysis, or a certified interval.
//! * [`multidim`]: polydisk and vector-valued radii and bounds.
//! * [`oracle`]: truncated power series of concrete families used to verify
//!   every closed form independently.
//! * [`harness`]: property suites tying formulas to the oracle, with JSON reports.
//! * [`output`] and [`cli`]: records, CSV sweeps and the `bohr` command line.

pub mod cli;
pub mod error;
pub mod harness;
pub mod multidim;
pub mod oracle;
pub mod output;
pub mod params;
pub mod radius;
pub mod scan;

pub use error::{BohrError, Result};
pub use params::BohrParams;
pub use radius::{
    crossover_condition, eval_a, eval_s, hat_root, inf_a, inf_s, radius_scalar, radius_scalar_via,
    Argmin, CaseTag, RadiusResult, RadiusValue,
};
