//! `a f² + 2ω f G + b G² = e^{g}` with `G = γ₁ f(z+c) + γ₂ f`, for `ω² ≠ ab`.

use serde::{Deserialize, Serialize};

use super::bundle::{rel_gap, Checks, SolutionBundle};
use super::solvers::{solve_xi_with, xi_relation};
use super::{check_len, fixed_point_gap};
use crate::algebra::{exact_dot, MPoly, PeriodicPoly, Shift};
use crate::equations::{omega_roots, EquationSpec, OmegaRoots, Sign};
use crate::expfun::{ExpPoly, ExpTerm};
use crate::{Cx, Error, Result};

const I: Cx = Cx::new(0.0, 1.0);
const ZERO: Cx = Cx::new(0.0, 0.0);

/// Single-exponential family `f = κ(ξ)·e^{(L + H + B₃)/2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrinomialI {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub omega: Cx,
    pub gamma1: Cx,
    pub gamma2: Cx,
    /// Solved from `L(c)` when absent.
    #[serde(default)]
    pub xi: Option<Cx>,
    pub l: Vec<Cx>,
    pub h: PeriodicPoly,
    pub b3: Cx,
    #[serde(default)]
    pub swap_roots: bool,
    #[serde(default)]
    pub xi_sign: Sign,
}

/// Two-exponential family `f = (w₂e^{h₁} − w₁e^{h₂})/(√a(w₂ − w₁))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrinomialII {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub omega: Cx,
    pub gamma1: Cx,
    pub gamma2: Cx,
    pub l1: Vec<Cx>,
    pub l2: Vec<Cx>,
    pub h1: PeriodicPoly,
    pub h2: PeriodicPoly,
    pub d1: Cx,
    pub d2: Cx,
    #[serde(default)]
    pub swap_roots: bool,
}

/// `ω = 0`: single-exponential family `f = ((ξ²+1)/(2ξ√a))·e^{(L + H + A)/2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaZeroI {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub gamma1: Cx,
    pub gamma2: Cx,
    #[serde(default)]
    pub xi: Option<Cx>,
    pub l: Vec<Cx>,
    pub h: PeriodicPoly,
    pub a_const: Cx,
    #[serde(default)]
    pub xi_sign: Sign,
}

/// `ω = 0`: two-exponential family `f = (e^{h₁} + e^{h₂})/(2√a)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaZeroII {
    pub c: Shift,
    pub a: Cx,
    pub b: Cx,
    pub gamma1: Cx,
    pub gamma2: Cx,
    pub l1: Vec<Cx>,
    pub l2: Vec<Cx>,
    pub h1: PeriodicPoly,
    pub h2: PeriodicPoly,
    pub b1: Cx,
    pub b2: Cx,
}

fn roots_for(a: Cx, b: Cx, omega: Cx, swap: bool) -> Result<OmegaRoots> {
    let r = omega_roots(a, b, omega)?;
    if r.omega_zero {
        return Err(Error::DegenerateOmega("ω = 0 belongs to the ω-zero family".into()));
    }
    if r.double_root {
        return Err(Error::DegenerateOmega("ω² = ab reduces to the linear equation".into()));
    }
    Ok(if swap { r.swapped() } else { r })
}

/// Labelled roots `(−i, i)` used when `ω = 0`.
fn omega_zero_roots(a: Cx, b: Cx) -> Result<OmegaRoots> {
    if a * b == ZERO {
        return Err(Error::ZeroProduct);
    }
    Ok(OmegaRoots { w1: -I, w2: I, sqrt_ab: a.sqrt() * b.sqrt(), omega_zero: true, double_root: false })
}

/// Values `e^{L₁(c)}`, `e^{L₂(c)}` required by the two-exponential family.
pub fn required_exponentials(a: Cx, b: Cx, roots: &OmegaRoots, gamma1: Cx, gamma2: Cx) -> (Cx, Cx) {
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let (w1, w2) = (roots.w1, roots.w2);
    ((sa - w2 * gamma2 * sb) / (w2 * gamma1 * sb), (sa - w1 * gamma2 * sb) / (w1 * gamma1 * sb))
}

struct SingleExp<'a> {
    theorem: &'a str,
    c: &'a Shift,
    a: Cx,
    b: Cx,
    omega: Cx,
    gamma1: Cx,
    gamma2: Cx,
    roots: OmegaRoots,
    xi: Option<Cx>,
    xi_sign: Sign,
    l: &'a [Cx],
    h: &'a PeriodicPoly,
    constant: Cx,
    prefactor: fn(Cx, Cx, &OmegaRoots) -> Cx,
    relation: fn(Cx, Cx, &OmegaRoots, Cx, Cx, Cx) -> Cx,
}

fn single_exponential(p: SingleExp<'_>) -> Result<SolutionBundle> {
    let n = p.c.n();
    check_len(p.l, n, "l")?;
    if p.gamma1 == ZERO {
        return Err(Error::InvalidParams("γ₁ must be non-zero".into()));
    }
    let mut checks = Checks::default();
    let h = p.h.build(p.c)?;
    checks.require("H periodic", fixed_point_gap(&h, p.c)?, 1e-12)?;
    let lc = exact_dot(p.l, p.c.as_slice());
    let e = (lc / 2.0).exp();
    let xi = match p.xi {
        Some(x) => x,
        None => solve_xi_with(p.a, p.b, &p.roots, p.gamma1, p.gamma2, lc)?.value,
    } * p.xi_sign.value();
    if xi == ZERO {
        return Err(Error::ZeroXi);
    }
    let rhs = (p.relation)(p.a, p.b, &p.roots, p.gamma1, p.gamma2, xi);
    checks.require("half-exponent relation", rel_gap(rhs, e), 1e-12)?;
    let kappa = (p.prefactor)(p.a, xi, &p.roots);
    let g = MPoly::linear(p.l, p.constant)?.try_add(&h)?;
    let f = ExpPoly::term(MPoly::constant(n, kappa), g.scale(Cx::new(0.5, 0.0)))?;
    let mut bundle = SolutionBundle::new(p.theorem, f, g.clone());
    bundle.branches.push(format!("roots ({:.6}, {:.6})", p.roots.w1, p.roots.w2));
    bundle.branches.push(format!("xi sign {}", p.xi_sign.symbol()));
    for (k, v) in [
        ("w1", p.roots.w1),
        ("w2", p.roots.w2),
        ("xi", xi),
        ("xi^2", xi * xi),
        ("prefactor", kappa),
        ("L(c)", lc),
        ("exp L(c)/2", e),
    ] {
        bundle.derived.insert(k.into(), v);
    }
    bundle.checks = checks.0;
    bundle.equation = Some(EquationSpec::Trinomial {
        a: p.a,
        b: p.b,
        omega: p.omega,
        gamma1: p.gamma1,
        gamma2: p.gamma2,
        g,
        c: p.c.clone(),
    });
    Ok(bundle)
}

struct TwoExp<'a> {
    theorem: &'a str,
    c: &'a Shift,
    a: Cx,
    b: Cx,
    omega: Cx,
    gamma1: Cx,
    gamma2: Cx,
    roots: OmegaRoots,
    l1: &'a [Cx],
    l2: &'a [Cx],
    h1: &'a PeriodicPoly,
    h2: &'a PeriodicPoly,
    k1: Cx,
    k2: Cx,
}

fn two_exponential(p: TwoExp<'_>) -> Result<SolutionBundle> {
    let n = p.c.n();
    check_len(p.l1, n, "l1")?;
    check_len(p.l2, n, "l2")?;
    if p.gamma1 == ZERO {
        return Err(Error::InvalidParams("γ₁ must be non-zero".into()));
    }
    let mut checks = Checks::default();
    let h1 = p.h1.build(p.c)?;
    let h2 = p.h2.build(p.c)?;
    checks.require("H1 periodic", fixed_point_gap(&h1, p.c)?, 1e-12)?;
    checks.require("H2 periodic", fixed_point_gap(&h2, p.c)?, 1e-12)?;
    let (r1, r2) = required_exponentials(p.a, p.b, &p.roots, p.gamma1, p.gamma2);
    let lc1 = exact_dot(p.l1, p.c.as_slice());
    let lc2 = exact_dot(p.l2, p.c.as_slice());
    checks.require("first exponent relation", rel_gap(lc1.exp(), r1), 1e-12)?;
    checks.require("second exponent relation", rel_gap(lc2.exp(), r2), 1e-12)?;
    let e1 = MPoly::linear(p.l1, Cx::new(0.0, 0.0))?.try_add(&h1)?;
    let e2 = MPoly::linear(p.l2, Cx::new(0.0, 0.0))?.try_add(&h2)?;
    if e1.approx_eq(&e2, crate::TAU_EXPO) {
        return Err(Error::BranchDegenerate);
    }
    let (w1, w2) = (p.roots.w1, p.roots.w2);
    let scale = Cx::new(1.0, 0.0) / (p.a.sqrt() * (w2 - w1));
    let ex1 = e1.add_constant(p.k1);
    let ex2 = e2.add_constant(p.k2);
    let f = ExpPoly::from_terms(
        n,
        vec![
            ExpTerm { coef: MPoly::constant(n, w2 * scale), expo: ex1.clone() },
            ExpTerm { coef: MPoly::constant(n, -w1 * scale), expo: ex2.clone() },
        ],
    )?;
    let g = ex1.try_add(&ex2)?;
    let mut bundle = SolutionBundle::new(p.theorem, f, g.clone());
    bundle.branches.push(format!("roots ({:.6}, {:.6})", w1, w2));
    for (k, v) in [
        ("w1", w1),
        ("w2", w2),
        ("required exp L1(c)", r1),
        ("required exp L2(c)", r2),
        ("L1(c)", lc1),
        ("L2(c)", lc2),
        ("first prefactor", w2 * scale),
        ("second prefactor", -w1 * scale),
    ] {
        bundle.derived.insert(k.into(), v);
    }
    bundle.checks = checks.0;
    bundle.equation = Some(EquationSpec::Trinomial {
        a: p.a,
        b: p.b,
        omega: p.omega,
        gamma1: p.gamma1,
        gamma2: p.gamma2,
        g,
        c: p.c.clone(),
    });
    Ok(bundle)
}

fn general_prefactor(a: Cx, xi: Cx, r: &OmegaRoots) -> Cx {
    (r.w2 * xi * xi - r.w1) / (xi * a.sqrt() * (r.w2 - r.w1))
}

fn omega_zero_prefactor(a: Cx, xi: Cx, _: &OmegaRoots) -> Cx {
    (xi * xi + 1.0) / (2.0 * xi * a.sqrt())
}

fn omega_zero_relation(a: Cx, b: Cx, _: &OmegaRoots, gamma1: Cx, gamma2: Cx, xi: Cx) -> Cx {
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let x = xi * xi;
    (sa * (x - 1.0) - I * gamma2 * sb * (x + 1.0)) / (I * gamma1 * sb * (x + 1.0))
}

impl TrinomialI {
    pub fn construct(&self) -> Result<SolutionBundle> {
        let roots = roots_for(self.a, self.b, self.omega, self.swap_roots)?;
        single_exponential(SingleExp {
            theorem: "trinomial/i",
            c: &self.c,
            a: self.a,
            b: self.b,
            omega: self.omega,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            roots,
            xi: self.xi,
            xi_sign: self.xi_sign,
            l: &self.l,
            h: &self.h,
            constant: self.b3,
            prefactor: general_prefactor,
            relation: xi_relation,
        })
    }
}

impl TrinomialII {
    pub fn roots(&self) -> Result<OmegaRoots> {
        roots_for(self.a, self.b, self.omega, self.swap_roots)
    }

    pub fn construct(&self) -> Result<SolutionBundle> {
        two_exponential(TwoExp {
            theorem: "trinomial/ii",
            c: &self.c,
            a: self.a,
            b: self.b,
            omega: self.omega,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            roots: self.roots()?,
            l1: &self.l1,
            l2: &self.l2,
            h1: &self.h1,
            h2: &self.h2,
            k1: self.d1,
            k2: self.d2,
        })
    }
}

impl OmegaZeroI {
    pub fn construct(&self) -> Result<SolutionBundle> {
        single_exponential(SingleExp {
            theorem: "trinomial-omega-zero/i",
            c: &self.c,
            a: self.a,
            b: self.b,
            omega: ZERO,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            roots: omega_zero_roots(self.a, self.b)?,
            xi: self.xi,
            xi_sign: self.xi_sign,
            l: &self.l,
            h: &self.h,
            constant: self.a_const,
            prefactor: omega_zero_prefactor,
            relation: omega_zero_relation,
        })
    }
}

impl OmegaZeroII {
    /// Values `e^{L₁(c)}`, `e^{L₂(c)}` the family requires.
    pub fn required_exponentials(a: Cx, b: Cx, gamma1: Cx, gamma2: Cx) -> (Cx, Cx) {
        let (sa, sb) = (a.sqrt(), b.sqrt());
        ((I * gamma2 * sb - sa) / (-I * gamma1 * sb), (I * gamma2 * sb + sa) / (-I * gamma1 * sb))
    }

    pub fn construct(&self) -> Result<SolutionBundle> {
        let roots = omega_zero_roots(self.a, self.b)?;
        two_exponential(TwoExp {
            theorem: "trinomial-omega-zero/ii",
            c: &self.c,
            a: self.a,
            b: self.b,
            omega: ZERO,
            gamma1: self.gamma1,
            gamma2: self.gamma2,
            roots,
            l1: &self.l1,
            l2: &self.l2,
            h1: &self.h1,
            h2: &self.h2,
            k1: self.b1,
            k2: self.b2,
        })
    }
}
