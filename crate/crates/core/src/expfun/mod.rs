//! Exponential polynomials `Σⱼ Qⱼ(z)e^{hⱼ(z)}`.

mod exppoly;
mod zero;

pub use exppoly::{ExpPoly, ExpTerm, LogValue};
pub use zero::{zero_test, CertificateKind, SampleConfig, ZeroTest};
