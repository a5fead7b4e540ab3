//! The sine solution of `f² + f(z+c)² = q` and the pair `(cos h, sin h)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bundle::{Checks, SolutionBundle};
use crate::algebra::{MPoly, Shift};
use crate::equations::EquationSpec;
use crate::expfun::{zero_test, ExpPoly, ExpTerm, SampleConfig};
use crate::{Cx, Error, Result};

const I: Cx = Cx::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassicalParams {
    /// `f = √q·sin(Az + B)` with `A = (4k+1)π/(2c)`, one variable.
    Sine { q: Cx, c: Cx, k: i64, b: Cx },
    /// `(cos h, sin h)` for an arbitrary polynomial `h`.
    CosSinPair { h: MPoly },
}

/// `(e^{iu} − e^{−iu})/(2i)` or `(e^{iu} + e^{−iu})/2` for a polynomial `u`.
fn trig(u: &MPoly, sine: bool) -> Result<ExpPoly> {
    let n = u.n();
    let iu = u.scale(I);
    let (p, m) = if sine { (Cx::new(0.0, -0.5), Cx::new(0.0, 0.5)) } else { (Cx::new(0.5, 0.0), Cx::new(0.5, 0.0)) };
    ExpPoly::from_terms(
        n,
        vec![
            ExpTerm { coef: MPoly::constant(n, p), expo: iu.clone() },
            ExpTerm { coef: MPoly::constant(n, m), expo: -iu },
        ],
    )
}

pub fn construct(params: &ClassicalParams) -> Result<SolutionBundle> {
    match params {
        ClassicalParams::Sine { q, c, k, b } => {
            if *c == Cx::new(0.0, 0.0) {
                return Err(Error::InvalidParams("c must be non-zero".into()));
            }
            let freq = (4 * k + 1) as f64 * PI / (2.0 * c);
            let u = MPoly::linear(&[freq], *b)?;
            let f = trig(&u, true)?.scale(q.sqrt());
            let g = MPoly::zero(1);
            let mut bundle = SolutionBundle::new("sine", f, g.clone());
            bundle.derived.insert("A".into(), freq);
            bundle.equation = Some(EquationSpec::BinomialDiff {
                a: Cx::new(1.0, 0.0),
                b: Cx::new(1.0, 0.0),
                p: MPoly::one(1),
                q: MPoly::constant(1, *q),
                g,
                a1: Cx::new(1.0, 0.0),
                a0: Cx::new(0.0, 0.0),
                c: Shift::new(vec![*c])?,
            });
            Ok(bundle)
        }
        ClassicalParams::CosSinPair { h } => {
            let n = h.n();
            let cos = trig(h, false)?;
            let sin = trig(h, true)?;
            let one = ExpPoly::constant(n, Cx::new(1.0, 0.0));
            let sum = cos.square()?.try_add(&sin.square()?)?;
            let t = zero_test(&sum.try_sub(&one)?, &[&sum, &one], &SampleConfig::default())?;
            let mut checks = Checks::default();
            checks.require("cos^2 + sin^2 = 1", t.max_rel_residual, 1e-12)?;
            let mut bundle = SolutionBundle::new("cosine-sine-pair", cos, MPoly::zero(n));
            bundle.checks = checks.0;
            bundle.companion = Some(sin);
            Ok(bundle)
        }
    }
}
