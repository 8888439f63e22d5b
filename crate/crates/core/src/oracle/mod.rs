//! Independent verification engine: truncated power series of concrete
//! families, the Bohr functionals evaluated on them, and random samples of
//! Schur and Carathéodory functions.

pub mod family;
pub mod quantity;
pub mod sampling;
pub mod series;

pub use family::FunctionFamily;
pub use quantity::{
    bohr_quantity, bombieri_bound, h_quantity, p_bohr_quantity, polydisk_bohr_quantity,
    polydisk_h_quantity, radius_of, radius_of_with, Functional, Quantity, RadiusOptions,
    BISECTION_TOL,
};
pub use sampling::{
    herglotz_series, sample_caratheodory, sample_schur, sample_schur_batch, split_seed,
};
pub use series::{Geometric, HomogeneousSums, PowerSeries1D, Tail};
