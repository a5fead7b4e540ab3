//! Sparse multivariate polynomials over ℂ.

mod midx;
mod mpoly;
mod periodic;
mod shift;

pub use midx::MIdx;
pub use mpoly::MPoly;
pub use periodic::{exact_dot, make_periodic, PeriodicDirection, PeriodicPoly};
pub use shift::Shift;
