use serde::{Deserialize, Serialize};

use super::{omega_roots, EquationSpec};
use crate::algebra::MPoly;
use crate::{Cx, SchemaTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    SolutionFamilyExists,
    NoFiniteOrderSolution,
    OutOfScope,
}

/// Degree bookkeeping behind the difference-operator non-existence argument:
/// comparing degrees forces `2p + q − 1 = q`, i.e. `p = 1/2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeCertificate {
    pub p: u32,
    pub q: u32,
    pub lhs_degree: i64,
    pub rhs_degree: i64,
    pub forced_p: f64,
    pub line: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub schema: SchemaTag,
    pub kind: VerdictKind,
    /// Solution family the verdict refers to.
    pub family: String,
    pub reason: String,
    pub certificate: Option<DegreeCertificate>,
}

fn verdict(kind: VerdictKind, family: &str, reason: impl Into<String>) -> Verdict {
    Verdict { schema: SchemaTag, kind, family: family.to_string(), reason: reason.into(), certificate: None }
}

const ZERO: Cx = Cx::new(0.0, 0.0);

/// Classify an equation: which solution family applies, or why finite-order
/// entire solutions cannot exist. Never fails on a structurally valid spec;
/// invalid specs come back as `OutOfScope`.
pub fn diagnose(spec: &EquationSpec) -> Verdict {
    use VerdictKind::*;
    if let Err(e) = spec.validate() {
        return verdict(OutOfScope, spec.kind(), format!("malformed equation: {e}"));
    }
    match spec {
        EquationSpec::BinomialDiff { a, b, p, q, a1, a0, .. } => {
            let fam = "binomial-difference";
            if a * b == ZERO {
                return verdict(OutOfScope, fam, "requires ab ≠ 0");
            }
            if p.is_zero() || q.is_zero() {
                return verdict(OutOfScope, fam, "P and Q must be non-zero polynomials");
            }
            if p.degree() == 0 {
                return verdict(
                    SolutionFamilyExists,
                    fam,
                    "P is a non-zero constant; solutions are two-exponential combinations",
                );
            }
            let mut v = verdict(
                NoFiniteOrderSolution,
                fam,
                "a finite-order transcendental solution forces P to reduce to a non-zero constant, but deg P ≥ 1",
            );
            if *a1 == Cx::new(1.0, 0.0) && *a0 == Cx::new(-1.0, 0.0) {
                let (pd, qd) = (p.degree(), q.degree());
                let lhs = 2 * pd as i64 + qd as i64 - 1;
                v.reason = "difference-operator form: degree comparison is unsatisfiable over the integers".into();
                v.certificate = Some(DegreeCertificate {
                    p: pd,
                    q: qd,
                    lhs_degree: lhs,
                    rhs_degree: qd as i64,
                    forced_p: 0.5,
                    line: format!("2·{pd} + {qd} − 1 = {lhs} ≠ {qd}; equality would need p = 1/2"),
                });
            }
            v
        }
        EquationSpec::Pdde { a, b, p, q, .. } => {
            let fam = "pdde";
            if a * b == ZERO {
                return verdict(OutOfScope, fam, "requires ab ≠ 0");
            }
            if p.is_zero() || q.is_zero() {
                return verdict(OutOfScope, fam, "P and Q must be non-zero polynomials");
            }
            if p.degree() > 0 || q.degree() > 0 {
                return verdict(
                    NoFiniteOrderSolution,
                    fam,
                    "a finite-order transcendental solution forces P and Q to be non-zero constants",
                );
            }
            verdict(SolutionFamilyExists, fam, "P and Q are non-zero constants")
        }
        EquationSpec::Trinomial { a, b, omega, gamma1, .. } => {
            if *gamma1 == ZERO {
                return verdict(OutOfScope, "trinomial", "requires γ₁ ≠ 0");
            }
            let Ok(r) = omega_roots(*a, *b, *omega) else {
                return verdict(OutOfScope, "trinomial", "requires ab ≠ 0");
            };
            if r.omega_zero {
                verdict(SolutionFamilyExists, "trinomial-omega-zero", "ω = 0: the quadratic form factors with roots ∓i")
            } else if r.double_root {
                verdict(
                    SolutionFamilyExists,
                    "linear-reduction",
                    "ω² = ab: the quadratic form is a perfect square and the equation reduces to a linear one",
                )
            } else {
                verdict(SolutionFamilyExists, "trinomial", "ω² ∉ {0, ab}: two distinct roots")
            }
        }
        EquationSpec::LinearReduced { a, b, gamma1, g, c, .. } => {
            let fam = "linear-reduction";
            if a * b == ZERO || *gamma1 == ZERO {
                return verdict(OutOfScope, fam, "requires ab ≠ 0 and γ₁ ≠ 0");
            }
            let Ok(shifted) = g.shift(c) else {
                return verdict(OutOfScope, fam, "cannot shift g");
            };
            let diff = shifted.try_sub(g).unwrap_or_else(|_| MPoly::zero(g.n()));
            if g.is_constant() {
                verdict(SolutionFamilyExists, fam, "constant exponent")
            } else if diff.is_zero() {
                verdict(SolutionFamilyExists, fam, "c-periodic exponent")
            } else if diff.is_constant() {
                verdict(SolutionFamilyExists, fam, "exponent with linear drift along c")
            } else {
                verdict(OutOfScope, fam, "g(z+c) − g(z) is not constant")
            }
        }
    }
}
