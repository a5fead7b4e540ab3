use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::MPoly;
use crate::equations::{verify_labeled, EquationSpec, VerificationReport};
use crate::expfun::{zero_test, CertificateKind, ExpPoly, SampleConfig};
use crate::{Cx, Error, Result, SchemaTag};

/// A named side condition and how far the constructed data is from it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tol: f64,
    pub holds: bool,
    /// Enforced checks abort construction when they fail; the others are
    /// informational (e.g. alternative readings of a condition).
    pub enforced: bool,
}

/// A constructed solution together with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionBundle {
    pub schema: SchemaTag,
    pub theorem: String,
    pub branches: Vec<String>,
    pub f: ExpPoly,
    pub g: MPoly,
    pub derived: BTreeMap<String, Cx>,
    pub checks: Vec<Check>,
    /// The equation `f` is claimed to solve, when it is one of the
    /// supported families.
    pub equation: Option<EquationSpec>,
    /// Second function of a pair solution.
    pub companion: Option<ExpPoly>,
}

impl SolutionBundle {
    pub(crate) fn new(theorem: &str, f: ExpPoly, g: MPoly) -> Self {
        SolutionBundle {
            schema: SchemaTag,
            theorem: theorem.to_string(),
            branches: Vec::new(),
            f,
            g,
            derived: BTreeMap::new(),
            checks: Vec::new(),
            equation: None,
            companion: None,
        }
    }

    pub fn derived(&self, name: &str) -> Option<Cx> {
        self.derived.get(name).copied()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Re-check the bundle: the residual of its equation, or `f² + g² − 1`
    /// for a pair solution.
    pub fn verify(&self, cfg: &SampleConfig) -> Result<VerificationReport> {
        if let Some(eq) = &self.equation {
            return verify_labeled(eq, &self.f, cfg, &self.branches);
        }
        let Some(other) = &self.companion else {
            return Err(Error::InvalidParams("bundle carries neither an equation nor a companion".into()));
        };
        let n = self.f.n();
        let sum = self.f.square()?.try_add(&other.square()?)?;
        let one = ExpPoly::constant(n, Cx::new(1.0, 0.0));
        let res = sum.try_sub(&one)?;
        let t = zero_test(&res, &[&sum, &one], cfg)?;
        Ok(VerificationReport {
            schema: SchemaTag,
            equation: "pair_unit_sum".into(),
            passed: t.is_zero,
            symbolic_zero: t.kind == CertificateKind::Symbolic,
            certificate: t.kind,
            max_rel_residual: t.max_rel_residual,
            residual_terms: res.len(),
            n_points: t.n_points,
            seed: cfg.seed,
            radius: cfg.radius,
            tol: cfg.tol,
            branch_labels: self.branches.clone(),
            witness: if t.is_zero { None } else { t.witness },
        })
    }
}

/// Collects side-condition checks while a constructor runs.
#[derive(Default)]
pub(crate) struct Checks(pub(crate) Vec<Check>);

impl Checks {
    pub(crate) fn require(&mut self, name: &str, residual: f64, tol: f64) -> Result<()> {
        let holds = residual <= tol;
        self.0.push(Check { name: name.into(), residual, tol, holds, enforced: true });
        if holds {
            Ok(())
        } else {
            Err(Error::ConstraintViolated { name: name.into(), residual })
        }
    }

    pub(crate) fn report(&mut self, name: &str, residual: f64, tol: f64) {
        let holds = residual <= tol;
        self.0.push(Check { name: name.into(), residual, tol, holds, enforced: false });
    }
}

/// `|x − y| / max(|x|, |y|)`, zero when both vanish.
pub(crate) fn rel_gap(x: Cx, y: Cx) -> f64 {
    let s = x.norm().max(y.norm());
    if s == 0.0 {
        0.0
    } else {
        (x - y).norm() / s
    }
}
