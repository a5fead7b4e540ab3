use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::bundle::rel_gap;
use crate::algebra::{exact_dot, Shift};
use crate::equations::{omega_roots, OmegaRoots};
use crate::{Cx, Error, Result};

/// A solved side condition: the value, which logarithm branch produced it,
/// and the back-substitution residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSolveResult {
    pub value: Cx,
    /// Coefficients of the solved linear form, for exponent solves.
    pub linear: Option<Vec<Cx>>,
    pub branch_index: i64,
    pub residual: f64,
}

/// Right-hand side of the half-exponent relation
/// `e^{L(c)/2} = [(w₁γ₂√b − √a) − (w₂γ₂√b − √a)ξ²] / [γ₁√b(w₂ξ² − w₁)]`.
pub fn xi_relation(a: Cx, b: Cx, roots: &OmegaRoots, gamma1: Cx, gamma2: Cx, xi: Cx) -> Cx {
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let (w1, w2) = (roots.w1, roots.w2);
    let x = xi * xi;
    ((w1 * gamma2 * sb - sa) - (w2 * gamma2 * sb - sa) * x) / (gamma1 * sb * (w2 * x - w1))
}

/// Solve the half-exponent relation for `ξ` given `L(c)`, using the default
/// root labelling.
pub fn solve_xi(a: Cx, b: Cx, omega: Cx, gamma1: Cx, gamma2: Cx, lc: Cx) -> Result<ConstraintSolveResult> {
    let roots = omega_roots(a, b, omega)?;
    if roots.double_root || roots.omega_zero {
        return Err(Error::DegenerateOmega("ω² must avoid 0 and ab".into()));
    }
    solve_xi_with(a, b, &roots, gamma1, gamma2, lc)
}

/// As [`solve_xi`] with explicit roots; the relation is linear-fractional in
/// `ξ²`, so there is one `ξ²` and the principal `ξ` is returned.
pub fn solve_xi_with(
    a: Cx,
    b: Cx,
    roots: &OmegaRoots,
    gamma1: Cx,
    gamma2: Cx,
    lc: Cx,
) -> Result<ConstraintSolveResult> {
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let (w1, w2) = (roots.w1, roots.w2);
    let e = (lc / 2.0).exp();
    let big_a = w1 * gamma2 * sb - sa;
    let big_b = w2 * gamma2 * sb - sa;
    let k = gamma1 * sb;
    let det = k * sa * (w2 - w1);
    let det_scale = k.norm() * sa.norm() * (w1.norm() + w2.norm());
    if det.norm() <= 1e-14 * det_scale || det_scale == 0.0 {
        return Err(Error::NoSolution("the relation does not depend on ξ".into()));
    }
    let num = big_a + e * k * w1;
    let den = e * k * w2 + big_b;
    if den.norm() <= 1e-14 * (e * k * w2).norm().max(big_b.norm()) {
        return Err(Error::NoSolution("the required value is the image of ξ = ∞".into()));
    }
    let x = num / den;
    if x == Cx::new(0.0, 0.0) {
        return Err(Error::ZeroXi);
    }
    let xi = x.sqrt();
    let back = xi_relation(a, b, roots, gamma1, gamma2, xi);
    Ok(ConstraintSolveResult { value: xi, linear: None, branch_index: 0, residual: rel_gap(back, e) })
}

/// Linear forms `L` with `L(c) = Log(target) + 2πik` for each `k`.
///
/// `L` is `base` with its `c`-component removed, plus `(v/c_j)z_j` on the
/// first axis `j` where `c_j ≠ 0`.
pub fn solve_linear_exponent(
    target: Cx,
    c: &Shift,
    ks: impl IntoIterator<Item = i64>,
    base: Option<&[Cx]>,
) -> Result<Vec<ConstraintSolveResult>> {
    if target == Cx::new(0.0, 0.0) {
        return Err(Error::ZeroTarget);
    }
    let j = c.pivot().ok_or_else(|| Error::InvalidParams("shift c must be non-zero".into()))?;
    let cs = c.as_slice();
    let mut orth = match base {
        Some(b) if b.len() != c.n() => return Err(Error::DimensionMismatch { expected: c.n(), found: b.len() }),
        Some(b) => b.to_vec(),
        None => vec![Cx::new(0.0, 0.0); c.n()],
    };
    let drift = exact_dot(&orth, cs);
    orth[j] -= drift / cs[j];
    let log = target.ln();
    let mut out = Vec::new();
    for k in ks {
        let v = log + Cx::new(0.0, TAU * k as f64);
        let mut l = orth.clone();
        // the orthogonal part contributes (almost) nothing at c; absorb its
        // rounding into the pivot so that L(c) hits v as closely as possible
        let rest = exact_dot(&l, cs);
        l[j] += (v - rest) / cs[j];
        let lc = exact_dot(&l, cs);
        let residual = (target * (-lc).exp() - 1.0).norm();
        out.push(ConstraintSolveResult { value: lc, linear: Some(l), branch_index: k, residual });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    #[test]
    fn xi_round_trip_at_one() {
        let one = c(1.0, 0.0);
        let roots = omega_roots(one, one, c(2.0, 0.0)).unwrap();
        let e = xi_relation(one, one, &roots, one, one, one);
        let lc = 2.0 * e.ln();
        let r = solve_xi(one, one, c(2.0, 0.0), one, one, lc).unwrap();
        assert!((r.value * r.value - one).norm() < 1e-14);
        assert!(r.residual < 1e-14);
    }

    #[test]
    fn exponent_of_e_along_first_axis() {
        let s = Shift::real(&[1.0, 0.0]).unwrap();
        let r = solve_linear_exponent(c(std::f64::consts::E, 0.0), &s, [0], None).unwrap();
        let l = r[0].linear.as_ref().unwrap();
        assert!((l[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(l[1], c(0.0, 0.0));
        assert!(r[0].residual <= 1e-15);
    }

    #[test]
    fn zero_target_rejected() {
        let s = Shift::real(&[1.0]).unwrap();
        assert_eq!(solve_linear_exponent(c(0.0, 0.0), &s, [0], None), Err(Error::ZeroTarget));
    }

    #[test]
    fn branches_differ_by_two_pi_i() {
        let s = Shift::real(&[2.0, 1.0]).unwrap();
        let r = solve_linear_exponent(c(-3.0, 1.0), &s, -1..=1, Some(&[c(0.5, 0.0), c(1.0, 1.0)])).unwrap();
        assert_eq!(r.len(), 3);
        let d = r[2].value - r[1].value;
        assert!((d - c(0.0, TAU)).norm() < 1e-12);
        assert!(r.iter().all(|x| x.residual < 1e-12));
    }
}
