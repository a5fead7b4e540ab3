//! `a f² + b P² (a₁ f(z+c) + a₀ f)² = Q e^{g}`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::bundle::{rel_gap, Checks, SolutionBundle};
use super::{check_len, fixed_point_gap, solve_linear_exponent};
use crate::algebra::{exact_dot, MPoly, PeriodicPoly, Shift};
use crate::equations::{EquationSpec, Sign};
use crate::expfun::{zero_test, ExpPoly, ExpTerm, SampleConfig};
use crate::{Cx, Error, Result};

const I: Cx = Cx::new(0.0, 1.0);

/// Two-exponential family `f = (Q₁e^{h₁} + Q₂e^{h₂})/(2√a)` with
/// `hₗ = Lₗ + ψₗ(s) + kₗ`, `Q₁`, `Q₂`, `ψ₁`, `ψ₂` all `c`-periodic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinomialI {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub a1: Cx,
    pub a0: Cx,
    pub l1: Vec<Cx>,
    pub l2: Vec<Cx>,
    pub psi1: PeriodicPoly,
    pub psi2: PeriodicPoly,
    pub q1: PeriodicPoly,
    pub q2: PeriodicPoly,
    pub k1: Cx,
    pub k2: Cx,
    #[serde(default)]
    pub p_sign: Sign,
}

impl BinomialI {
    /// The family exists only when `e^{L₁(c)} + e^{L₂(c)} = −2a₀/a₁`.
    /// Keep the product `e^{L₁(c)+L₂(c)} = e^{2·half_sum}` and adjust both
    /// linear forms along the first non-zero axis of `c` so the sum condition
    /// holds. `root` picks which root of `t² + (2a₀/a₁)t + e^{2·half_sum}`
    /// becomes `e^{L₁(c)}`.
    pub fn with_compatible_exponents(&self, half_sum: Cx, root: usize) -> Result<BinomialI> {
        if self.a1 == Cx::new(0.0, 0.0) {
            return Err(Error::InvalidParams("a₁ must be non-zero".into()));
        }
        let s = -2.0 * self.a0 / self.a1;
        let m = (2.0 * half_sum).exp();
        let disc = (s * s - 4.0 * m).sqrt();
        let x = if root == 0 { (s + disc) / 2.0 } else { (s - disc) / 2.0 };
        let y = s - x;
        let r1 = solve_linear_exponent(x, &self.c, [0], Some(&self.l1))?.remove(0);
        let v2 = 2.0 * half_sum - r1.value;
        let k = ((v2 - y.ln()).im / TAU).round() as i64;
        let r2 = solve_linear_exponent(y, &self.c, [k], Some(&self.l2))?.remove(0);
        Ok(BinomialI { l1: r1.linear.unwrap(), l2: r2.linear.unwrap(), ..self.clone() })
    }

    pub fn construct(&self) -> Result<SolutionBundle> {
        let c = &self.c;
        let n = c.n();
        check_len(&self.l1, n, "l1")?;
        check_len(&self.l2, n, "l2")?;
        if self.a * self.b == Cx::new(0.0, 0.0) {
            return Err(Error::ZeroProduct);
        }
        if self.a1 == Cx::new(0.0, 0.0) {
            return Err(Error::InvalidParams("a₁ must be non-zero".into()));
        }
        let mut checks = Checks::default();
        let psi1 = self.psi1.build(c)?;
        let psi2 = self.psi2.build(c)?;
        let q1 = self.q1.build(c)?;
        let q2 = self.q2.build(c)?;
        for (name, p) in
            [("psi1 periodic", &psi1), ("psi2 periodic", &psi2), ("Q1 periodic", &q1), ("Q2 periodic", &q2)]
        {
            checks.require(name, fixed_point_gap(p, c)?, 1e-12)?;
        }
        if q1.is_zero() || q2.is_zero() {
            return Err(Error::InvalidParams("Q₁ and Q₂ must be non-zero".into()));
        }

        let lc1 = exact_dot(&self.l1, c.as_slice());
        let lc2 = exact_dot(&self.l2, c.as_slice());
        let (x, y) = (lc1.exp(), lc2.exp());
        let compat = (self.a1 * (x + y) + 2.0 * self.a0).norm()
            / (self.a1.norm() * (x.norm() + y.norm()) + 2.0 * self.a0.norm());
        checks.require("exponent sum", compat, 1e-10)?;

        let (sa, sb) = (self.a.sqrt(), self.b.sqrt());
        let denom = self.a0 + self.a1 * x;
        if denom.norm() <= 1e-14 * (self.a0.norm() + (self.a1 * x).norm()) {
            return Err(Error::BranchDegenerate);
        }
        let p = self.p_sign.value() * sa / (I * sb * denom);
        let half = (lc1 + lc2) / 2.0;
        let printed_plus = sa / (I * sb * (self.a0 + self.a1 * half.exp()));
        let printed_minus = sa / (I * sb * (self.a0 - self.a1 * half.exp()));
        let gap = rel_gap(printed_plus * printed_plus, p * p).min(rel_gap(printed_minus * printed_minus, p * p));
        checks.report("P from half exponent", gap, 1e-10);

        let h1 = MPoly::linear(&self.l1, self.k1)?.try_add(&psi1)?;
        let h2 = MPoly::linear(&self.l2, self.k2)?.try_add(&psi2)?;
        let scale = Cx::new(0.5, 0.0) / sa;
        let f = ExpPoly::from_terms(
            n,
            vec![
                ExpTerm { coef: q1.scale(scale), expo: h1.clone() },
                ExpTerm { coef: q2.scale(scale), expo: h2.clone() },
            ],
        )?;
        let g = h1.try_add(&h2)?;

        let mut bundle = SolutionBundle::new("binomial-difference/i", f, g.clone());
        bundle.branches.push(format!("P sign {}", self.p_sign.symbol()));
        for (k, v) in [
            ("P", p),
            ("L1(c)", lc1),
            ("L2(c)", lc2),
            ("exp L1(c)", x),
            ("exp L2(c)", y),
            ("half exponent", half),
            ("P from half exponent (+)", printed_plus),
            ("P from half exponent (-)", printed_minus),
        ] {
            bundle.derived.insert(k.into(), v);
        }
        bundle.checks = checks.0;
        bundle.equation = Some(EquationSpec::BinomialDiff {
            a: self.a,
            b: self.b,
            p: MPoly::constant(n, p),
            q: q1.try_mul(&q2)?,
            g,
            a1: self.a1,
            a0: self.a0,
            c: c.clone(),
        });
        Ok(bundle)
    }
}

/// Single-exponential family `f = β·e^{L₂₁}` with `P` constant and `β`
/// subject to a functional constraint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinomialII {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub a1: Cx,
    pub a0: Cx,
    pub p: Cx,
    pub q: MPoly,
    pub beta: ExpPoly,
    pub l21: Vec<Cx>,
    pub b_const: Cx,
}

impl BinomialII {
    pub fn construct(&self) -> Result<SolutionBundle> {
        let c = &self.c;
        let n = c.n();
        check_len(&self.l21, n, "l21")?;
        if self.a * self.b == Cx::new(0.0, 0.0) {
            return Err(Error::ZeroProduct);
        }
        for (what, m) in [("q", self.q.n()), ("beta", self.beta.n())] {
            if m != n {
                return Err(Error::InvalidParams(format!("{what} has {m} variables, expected {n}")));
            }
        }
        let cfg = SampleConfig::default();
        let mut checks = Checks::default();
        let lc = exact_dot(&self.l21, c.as_slice());
        let p2 = self.p * self.p;
        let beta_c = self.beta.shift(c)?;
        let target = ExpPoly::term(self.q.clone(), MPoly::constant(n, self.b_const))?;
        let lhs = |drift: Cx| -> Result<ExpPoly> {
            let inner = beta_c.scale(self.a1 * drift).try_add(&self.beta.scale(self.a0))?;
            self.beta.square()?.scale(self.a).try_add(&inner.square()?.scale(self.b * p2))
        };
        let w = lhs(lc.exp())?;
        let t = zero_test(&w.try_sub(&target)?, &[&w, &target], &cfg)?;
        checks.require("beta constraint", t.max_rel_residual, cfg.tol)?;
        let w0 = lhs(Cx::new(1.0, 0.0))?;
        let t0 = zero_test(&w0.try_sub(&target)?, &[&w0, &target], &cfg)?;
        checks.report("beta constraint without exp L21(c)", t0.max_rel_residual, cfg.tol);

        let l21 = MPoly::linear(&self.l21, Cx::new(0.0, 0.0))?;
        let f = self.beta.try_mul(&ExpPoly::exp(l21.clone())?)?;
        let g = l21.scale(Cx::new(2.0, 0.0)).add_constant(self.b_const);
        let mut bundle = SolutionBundle::new("binomial-difference/ii", f, g.clone());
        bundle.derived.insert("L21(c)".into(), lc);
        bundle.derived.insert("P".into(), self.p);
        bundle.checks = checks.0;
        bundle.equation = Some(EquationSpec::BinomialDiff {
            a: self.a,
            b: self.b,
            p: MPoly::constant(n, self.p),
            q: self.q.clone(),
            g,
            a1: self.a1,
            a0: self.a0,
            c: c.clone(),
        });
        Ok(bundle)
    }
}
