//! Finite-temperature damping rates of Bogoliubov phonons in a weakly
//! interacting Bose gas with a smooth two-body potential.

pub mod error;
pub mod numerics;
pub mod bogoliubov;
pub mod damping;
pub mod params;
pub mod potential;
pub mod specfun;
pub mod vertices;

pub use error::{Error, Result};
pub use params::{diagnostics, make_params, GasParameters, RegimeDiagnostics};
pub use potential::{evaluate_vhat, validate_assumptions, PotentialModel};
