use serde::{Deserialize, Serialize};

use super::{residual_parts, EquationSpec};
use crate::expfun::{zero_test, CertificateKind, ExpPoly, SampleConfig};
use crate::{Cx, Result, SchemaTag};

/// Outcome of checking a candidate against an equation. Field order is the
/// serialised key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: SchemaTag,
    pub equation: String,
    pub passed: bool,
    pub symbolic_zero: bool,
    pub certificate: CertificateKind,
    pub max_rel_residual: f64,
    pub residual_terms: usize,
    pub n_points: usize,
    pub seed: u64,
    pub radius: f64,
    pub tol: f64,
    pub branch_labels: Vec<String>,
    pub witness: Option<Vec<Cx>>,
}

/// Build the residual and test it for zero.
///
/// Passing means either the residual cancelled symbolically, or every
/// sampled relative residual is within `cfg.tol` (a weaker certificate,
/// reported as `numeric`).
pub fn verify(spec: &EquationSpec, f: &ExpPoly, cfg: &SampleConfig) -> Result<VerificationReport> {
    verify_labeled(spec, f, cfg, &[])
}

pub fn verify_labeled(
    spec: &EquationSpec,
    f: &ExpPoly,
    cfg: &SampleConfig,
    branch_labels: &[String],
) -> Result<VerificationReport> {
    let parts = residual_parts(spec, f)?;
    let res = ExpPoly::sum(spec.n(), parts.iter())?;
    let refs: Vec<&ExpPoly> = parts.iter().collect();
    let t = zero_test(&res, &refs, cfg)?;
    Ok(VerificationReport {
        schema: SchemaTag,
        equation: spec.kind().to_string(),
        passed: t.is_zero,
        symbolic_zero: t.kind == CertificateKind::Symbolic,
        certificate: t.kind,
        max_rel_residual: t.max_rel_residual,
        residual_terms: res.len(),
        n_points: t.n_points,
        seed: cfg.seed,
        radius: cfg.radius,
        tol: cfg.tol,
        branch_labels: branch_labels.to_vec(),
        witness: if t.is_zero { None } else { t.witness },
    })
}
