//! The equation families, their residuals, verification and diagnosis.

mod diagnose;
mod omega;
mod residual;
mod spec;
mod verify;

pub use diagnose::{diagnose, DegreeCertificate, Verdict, VerdictKind};
pub use omega::{factor_check, factor_identity_error, omega_roots, OmegaRoots};
pub use residual::{residual, residual_parts};
pub use spec::{EquationSpec, Sign};
pub use verify::{verify, verify_labeled, VerificationReport};
