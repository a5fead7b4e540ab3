//! `√a f + σ√b(γ₁ f(z+c) + γ₂ f) = s·e^{g/2}`, the perfect-square case
//! `ω² = ab` of the trinomial equation.

use serde::{Deserialize, Serialize};

use super::bundle::{rel_gap, Checks, SolutionBundle};
use super::check_len;
use crate::algebra::{exact_dot, MPoly, Shift};
use crate::equations::{EquationSpec, Sign};
use crate::expfun::{zero_test, ExpPoly, SampleConfig};
use crate::{Cx, Error, Result};

/// General solution `f = K^{ℓ(z)}π(z) + C·e^{g/2}` where `π` is
/// `c`-periodic and `ℓ` is a linear functional with `ℓ(c) = 1`, so that
/// `K^{ℓ(z+c)} = K·K^{ℓ(z)}`. The power is `e^{ℓ(z)·Log K}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearReduction {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub gamma1: Cx,
    pub gamma2: Cx,
    pub sign_b: Sign,
    pub sign_rhs: Sign,
    pub ell: Vec<Cx>,
    pub pi: ExpPoly,
    pub g: MPoly,
}

impl LinearReduction {
    /// Which exponent regime `g` falls in: 1 constant, 2 periodic,
    /// 3 periodic plus a linear drift along `c`.
    pub fn case(&self) -> Result<u8> {
        let d = self.g.shift(&self.c)?.try_sub(&self.g)?;
        Ok(if self.g.is_constant() {
            1
        } else if d.is_zero() {
            2
        } else if d.is_constant() {
            3
        } else {
            return Err(Error::InvalidParams("g(z+c) − g(z) must be constant".into()));
        })
    }

    pub fn construct(&self) -> Result<SolutionBundle> {
        let c = &self.c;
        let n = c.n();
        check_len(&self.ell, n, "ell")?;
        for m in [self.pi.n(), self.g.n()] {
            if m != n {
                return Err(Error::DimensionMismatch { expected: n, found: m });
            }
        }
        if self.a * self.b == Cx::new(0.0, 0.0) {
            return Err(Error::ZeroProduct);
        }
        if self.gamma1 == Cx::new(0.0, 0.0) {
            return Err(Error::DenominatorZero("γ₁ = 0".into()));
        }
        let cfg = SampleConfig::default();
        let mut checks = Checks::default();
        let ell_c = exact_dot(&self.ell, c.as_slice());
        checks.require("ell(c) = 1", rel_gap(ell_c, Cx::new(1.0, 0.0)), 1e-12)?;
        let case = self.case()?;
        let drift = self.g.shift(c)?.try_sub(&self.g)?.constant_term();

        let (sa, sb) = (self.a.sqrt(), self.b.sqrt());
        let sigma = self.sign_b.value();
        let k = -(sa + sigma * self.gamma2 * sb) / (sigma * self.gamma1 * sb);
        let mut f = ExpPoly::zero(n);
        if !self.pi.is_zero() {
            let shifted = self.pi.shift(c)?;
            let t = zero_test(&shifted.try_sub(&self.pi)?, &[&self.pi], &cfg)?;
            checks.require("pi periodic", t.max_rel_residual, cfg.tol)?;
            if k == Cx::new(0.0, 0.0) {
                return Err(Error::DenominatorZero("K = 0 has no logarithm".into()));
            }
            let power = ExpPoly::exp(MPoly::linear(&self.ell, Cx::new(0.0, 0.0))?.scale(k.ln()))?;
            f = self.pi.try_mul(&power)?;
        }
        let e_half = (drift / 2.0).exp();
        let denom = sa + sigma * sb * (self.gamma2 + self.gamma1 * e_half);
        let denom_scale = sa.norm() + sb.norm() * (self.gamma2.norm() + (self.gamma1 * e_half).norm());
        if denom.norm() <= 1e-14 * denom_scale {
            return Err(Error::DenominatorZero("√a + σ√b(γ₂ + γ₁e^{δ/2}) = 0".into()));
        }
        let coef = self.sign_rhs.value() / denom;
        let particular = ExpPoly::exp(self.g.clone())?.halve_exponent()?.scale(coef);
        f = f.try_add(&particular)?;
        if case == 3 {
            checks.report("drift leaves the periodic denominator unchanged", rel_gap(e_half, Cx::new(1.0, 0.0)), 1e-12);
        }

        let mut bundle = SolutionBundle::new(&format!("linear-reduction/case-{case}"), f, self.g.clone());
        bundle.branches.push(format!("sign_b {}", self.sign_b.symbol()));
        bundle.branches.push(format!("sign_rhs {}", self.sign_rhs.symbol()));
        for (name, v) in [
            ("K", k),
            ("C", coef),
            ("denominator", denom),
            ("g(z+c) - g(z)", drift),
            ("case", Cx::new(case as f64, 0.0)),
        ] {
            bundle.derived.insert(name.into(), v);
        }
        bundle.checks = checks.0;
        bundle.equation = Some(EquationSpec::LinearReduced {
            a: self.a,
            b: self.b,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            g: self.g.clone(),
            c: c.clone(),
            sign_b: self.sign_b,
            sign_rhs: self.sign_rhs,
        });
        Ok(bundle)
    }
}
