//! `a f(z+c)² + b P² (∂f/∂z_axis)² = Q e^{g}`.

use serde::{Deserialize, Serialize};

use super::bundle::{rel_gap, Checks, SolutionBundle};
use super::{check_len, fixed_point_gap};
use crate::algebra::{exact_dot, MPoly, PeriodicPoly, Shift};
use crate::equations::EquationSpec;
use crate::expfun::{zero_test, ExpPoly, ExpTerm, SampleConfig};
use crate::numeric::sample_polydisc;
use crate::{Cx, Error, Result};

const I: Cx = Cx::new(0.0, 1.0);

/// `f = (α₁e^{h₁(z−c)} + α₂e^{h₂(z−c)})/(2√a)` with linear
/// `h₁ = r₁ + a·z`, `h₂ = r₂ + b·z`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PddeI {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub axis: usize,
    pub h1: Vec<Cx>,
    pub r1: Cx,
    pub h2: Vec<Cx>,
    pub r2: Cx,
    pub alpha1: Cx,
    pub alpha2: Cx,
}

impl PddeI {
    /// Adjust `h₁` on an axis other than `axis` so that
    /// `e^{(a−b)·c} = −a_axis/b_axis` holds, choosing the log branch `k`.
    pub fn with_compatible_h1(&self, k: i64) -> Result<PddeI> {
        let cs = self.c.as_slice();
        let j = (0..cs.len())
            .find(|&j| j != self.axis && cs[j] != Cx::new(0.0, 0.0))
            .ok_or_else(|| Error::InvalidParams("need a non-zero shift component off the axis".into()))?;
        check_len(&self.h1, cs.len(), "h1")?;
        check_len(&self.h2, cs.len(), "h2")?;
        let (ai, bi) = (self.h1[self.axis], self.h2[self.axis]);
        if bi == Cx::new(0.0, 0.0) {
            return Err(Error::DenominatorZero("b_axis".into()));
        }
        let want = (-ai / bi).ln() + Cx::new(0.0, std::f64::consts::TAU * k as f64);
        let mut h1 = self.h1.clone();
        let have = exact_dot(&h1, cs) - exact_dot(&self.h2, cs);
        h1[j] += (want - have) / cs[j];
        Ok(PddeI { h1, ..self.clone() })
    }

    pub fn construct(&self) -> Result<SolutionBundle> {
        let c = &self.c;
        let n = c.n();
        check_len(&self.h1, n, "h1")?;
        check_len(&self.h2, n, "h2")?;
        if self.axis >= n {
            return Err(Error::AxisOutOfRange { axis: self.axis, n });
        }
        if self.a * self.b == Cx::new(0.0, 0.0) {
            return Err(Error::ZeroProduct);
        }
        let (ai, bi) = (self.h1[self.axis], self.h2[self.axis]);
        if ai == Cx::new(0.0, 0.0) || bi == Cx::new(0.0, 0.0) {
            return Err(Error::DenominatorZero("the axis coefficients of h₁ and h₂ must be non-zero".into()));
        }
        let q = self.alpha1 * self.alpha2;
        if q == Cx::new(0.0, 0.0) {
            return Err(Error::InvalidParams("α₁α₂ must be non-zero".into()));
        }
        let mut checks = Checks::default();
        let ac = exact_dot(&self.h1, c.as_slice());
        let bc = exact_dot(&self.h2, c.as_slice());
        let e = (ac - bc).exp();
        let rel = (bi * e + ai).norm() / ((bi * e).norm() + ai.norm());
        checks.require("axis relation", rel, 1e-10)?;
        checks.report("axis relation as quotient", rel_gap(e, -ai / bi), 1e-10);

        let (sa, sb) = (self.a.sqrt(), self.b.sqrt());
        let p = sa * ac.exp() / (I * sb * ai);
        let scale = Cx::new(0.5, 0.0) / sa;
        let f = ExpPoly::from_terms(
            n,
            vec![
                ExpTerm { coef: MPoly::constant(n, self.alpha1 * scale), expo: MPoly::linear(&self.h1, self.r1 - ac)? },
                ExpTerm { coef: MPoly::constant(n, self.alpha2 * scale), expo: MPoly::linear(&self.h2, self.r2 - bc)? },
            ],
        )?;
        let sum: Vec<Cx> = self.h1.iter().zip(&self.h2).map(|(x, y)| x + y).collect();
        let g = MPoly::linear(&sum, self.r1 + self.r2)?;
        let mut bundle = SolutionBundle::new("pdde/i", f, g.clone());
        bundle.derived.insert("P".into(), p);
        bundle.derived.insert("Q".into(), q);
        bundle.derived.insert("exp (a-b).c".into(), e);
        bundle.checks = checks.0;
        bundle.equation = Some(EquationSpec::Pdde {
            a: self.a,
            b: self.b,
            p: MPoly::constant(n, p),
            q: MPoly::constant(n, q),
            g,
            c: c.clone(),
            axis: self.axis,
        });
        Ok(bundle)
    }
}

/// `f = γ(z−c)e^{L₁(z−c) + H(s)}` with `γ` constrained by a functional
/// identity whose constant `r₅` is solved for when not given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PddeII {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub axis: usize,
    pub p: Cx,
    pub q: Cx,
    pub gamma: ExpPoly,
    pub l1: Vec<Cx>,
    pub h: PeriodicPoly,
    #[serde(default)]
    pub r5: Option<Cx>,
}

impl PddeII {
    pub fn construct(&self) -> Result<SolutionBundle> {
        let c = &self.c;
        let n = c.n();
        check_len(&self.l1, n, "l1")?;
        if self.axis >= n {
            return Err(Error::AxisOutOfRange { axis: self.axis, n });
        }
        if self.gamma.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.gamma.n() });
        }
        if self.a * self.b == Cx::new(0.0, 0.0) {
            return Err(Error::ZeroProduct);
        }
        if self.q == Cx::new(0.0, 0.0) || self.p == Cx::new(0.0, 0.0) {
            return Err(Error::InvalidParams("P and Q must be non-zero".into()));
        }
        let cfg = SampleConfig::default();
        let mut checks = Checks::default();
        let h = self.h.build(c)?;
        checks.require("H periodic", fixed_point_gap(&h, c)?, 1e-12)?;
        let lc = exact_dot(&self.l1, c.as_slice());
        let xi = self.l1[self.axis];
        let gs = self.gamma.shift(&c.negated())?;
        let weight = self.b * self.p * self.p * (-2.0 * lc).exp();
        let w_for = |mult: &MPoly| -> Result<ExpPoly> {
            let inner = gs.partial(self.axis)?.try_add(&gs.mul_poly(mult)?)?;
            self.gamma.square()?.scale(self.a).try_add(&inner.square()?.scale(weight))
        };
        let w = w_for(&h.partial(self.axis)?.add_constant(xi))?;

        let r5 = match self.r5 {
            Some(r) => r,
            None => {
                let mut rng = rand::SeedableRng::seed_from_u64(cfg.seed);
                let z = sample_polydisc(&mut rng, n, cfg.radius);
                let k = w.eval(&z)? / self.q;
                if k == Cx::new(0.0, 0.0) {
                    return Err(Error::NoSolution("γ-constraint vanishes".into()));
                }
                k.ln()
            }
        };
        let target = ExpPoly::constant(n, self.q * r5.exp());
        let t = zero_test(&w.try_sub(&target)?, &[&w, &target], &cfg)?;
        checks.require("gamma constraint", t.max_rel_residual, cfg.tol)?;
        let d_axis = self.h.direction.as_ref().map(|d| d[self.axis]).unwrap_or_default();
        let w_alt = w_for(&MPoly::constant(n, xi + d_axis))?;
        let t_alt = zero_test(&w_alt.try_sub(&target)?, &[&w_alt, &target], &cfg)?;
        checks.report("gamma constraint with direction coefficient", t_alt.max_rel_residual, cfg.tol);

        let l1 = MPoly::linear(&self.l1, Cx::new(0.0, 0.0))?;
        let f = gs.try_mul(&ExpPoly::exp(l1.add_constant(-lc).try_add(&h)?)?)?;
        let g = l1.try_add(&h)?.scale(Cx::new(2.0, 0.0)).add_constant(r5);
        let mut bundle = SolutionBundle::new("pdde/ii", f, g.clone());
        bundle.derived.insert("r5".into(), r5);
        bundle.derived.insert("L1(c)".into(), lc);
        bundle.checks = checks.0;
        bundle.equation = Some(EquationSpec::Pdde {
            a: self.a,
            b: self.b,
            p: MPoly::constant(n, self.p),
            q: MPoly::constant(n, self.q),
            g,
            c: c.clone(),
            axis: self.axis,
        });
        Ok(bundle)
    }
}
