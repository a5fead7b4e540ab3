//! Exponential-polynomial solutions of Fermat-type functional equations in
//! several complex variables.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: sparse multivariate polynomials over ℂ with exact Taylor
//!   shifts, partial derivatives and periodic-polynomial builders.
//! * [`expfun`]: the ring of exponential polynomials `Σ Qⱼ(z)e^{hⱼ(z)}` with
//!   canonical normalisation, log-domain evaluation and zero testing.
//! * [`equations`]: the four equation families, residual construction,
//!   verification and the non-existence diagnoser.
//! * [`solutions`]: constructors that build solution families from
//!   parameters and validate their side conditions.
//! * [`growth`]: structural and numeric growth-order estimation.
//! * [`fixtures`]: named regression instances, runnable through the CLI.
//!
//! ```
//! use fermat_forge::solutions::{classical, ClassicalParams};
//! use fermat_forge::equations::verify;
//! use fermat_forge::SampleConfig;
//!
//! let bundle = classical::construct(&ClassicalParams::Sine {
//!     q: 1.0.into(),
//!     c: std::f64::consts::FRAC_PI_2.into(),
//!     k: 0,
//!     b: 0.0.into(),
//! })
//! .unwrap();
//! let report = verify(bundle.equation.as_ref().unwrap(), &bundle.f, &SampleConfig::default()).unwrap();
//! assert!(report.symbolic_zero);
//! ```

pub mod algebra;
pub mod cli;

pub mod equations;
mod error;
pub mod expfun;
pub mod fixtures;
pub mod growth;

mod numeric;
mod schema;
pub mod solutions;

pub use error::{Error, Result};
pub use expfun::{LogValue, SampleConfig};
pub use schema::SchemaTag;

/// Complex scalars used throughout the crate.
pub type Cx = num_complex::Complex64;

/// Relative threshold below which a polynomial coefficient is treated as zero.
pub const TAU_COEF: f64 = 1e-14;
/// Absolute threshold under which two exponents are merged.
pub const TAU_EXPO: f64 = 1e-10;
/// Default relative residual threshold for numeric zero tests.
pub const TAU_RES: f64 = 1e-9;
/// Largest real part of a constant that may be folded into a coefficient.
pub const FOLD_LIMIT: f64 = 700.0;
/// Schema tag written into every JSON payload.
pub const SCHEMA: &str = "fermat-forge/1";
