use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::expfun::{ExpPoly, SampleConfig};
use crate::numeric::sample_polydisc;
use crate::{Cx, Error, Result};

/// Roots of `ab·w² + 2ω√(ab)·w + ab = 0` rescaled, i.e. the pair with
/// `aF² + 2ωFG + bG² = (√aF − w₁√bG)(√aF − w₂√bG)`.
///
/// `√(ab)` is taken as `√a·√b` (principal roots of each factor), which is the
/// branch that makes the factorisation exact for complex `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OmegaRoots {
    pub w1: Cx,
    pub w2: Cx,
    pub sqrt_ab: Cx,
    pub omega_zero: bool,
    pub double_root: bool,
}

impl OmegaRoots {
    /// The same roots with the labels exchanged.
    pub fn swapped(self) -> Self {
        OmegaRoots { w1: self.w2, w2: self.w1, ..self }
    }
}

const DEGENERACY_TOL: f64 = 1e-12;

/// `w₁ = (−ω + √(ω²−ab))/√(ab)`, `w₂ = (−ω − √(ω²−ab))/√(ab)`.
pub fn omega_roots(a: Cx, b: Cx, omega: Cx) -> Result<OmegaRoots> {
    if a * b == Cx::new(0.0, 0.0) {
        return Err(Error::ZeroProduct);
    }
    let s = a.sqrt() * b.sqrt();
    let disc = omega * omega - a * b;
    let scale = (omega * omega).norm().max((a * b).norm());
    let double_root = disc.norm() <= DEGENERACY_TOL * scale;
    let omega_zero = omega == Cx::new(0.0, 0.0);
    if double_root {
        let w = -omega / s;
        return Ok(OmegaRoots { w1: w, w2: w, sqrt_ab: s, omega_zero, double_root });
    }
    let r = disc.sqrt();
    let plus = -omega + r;
    let minus = -omega - r;
    // the larger numerator is cancellation-free; the other root is its reciprocal
    let (w1, w2) = if plus.norm() >= minus.norm() {
        let w1 = plus / s;
        (w1, w1.inv())
    } else {
        let w2 = minus / s;
        (w2.inv(), w2)
    };
    Ok(OmegaRoots { w1, w2, sqrt_ab: s, omega_zero, double_root })
}

/// Relative error of the factorisation identity at scalar values `F`, `G`.
pub fn factor_identity_error(a: Cx, b: Cx, omega: Cx, roots: &OmegaRoots, f: Cx, g: Cx) -> f64 {
    let (sa, sb) = (a.sqrt(), b.sqrt());
    let t = [a * f * f, 2.0 * omega * f * g, b * g * g];
    let lhs: Cx = t.iter().sum();
    let u = sa * f - roots.w1 * sb * g;
    let v = sa * f - roots.w2 * sb * g;
    let scale = t.iter().map(|x| x.norm()).sum::<f64>().max(u.norm() * v.norm());
    if scale == 0.0 {
        return 0.0;
    }
    (lhs - u * v).norm() / scale
}

/// Largest factorisation error over sampled points, with `F`, `G` given as
/// exponential polynomials.
pub fn factor_check(a: Cx, b: Cx, omega: Cx, f: &ExpPoly, g: &ExpPoly, cfg: &SampleConfig) -> Result<f64> {
    let roots = omega_roots(a, b, omega)?;
    if roots.double_root {
        return Err(Error::DegenerateOmega("ω² = ab has a double root".into()));
    }
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: g.n() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let z = sample_polydisc(&mut rng, f.n(), cfg.radius);
        let e = factor_identity_error(a, b, omega, &roots, f.eval(&z)?, g.eval(&z)?);
        worst = worst.max(e);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    #[test]
    fn omega_zero_gives_plus_minus_i() {
        let r = omega_roots(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(r.omega_zero);
        assert!((r.w1 - c(0.0, 1.0)).norm() < 1e-15);
        assert!((r.w2 - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn double_root_is_flagged() {
        let r = omega_roots(c(2.0, 0.0), c(8.0, 0.0), c(4.0, 0.0)).unwrap();
        assert!(r.double_root);
        assert_eq!(r.w1, r.w2);
        assert!((r.w1 - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn small_root_keeps_relative_accuracy() {
        let r = omega_roots(c(1e-3, 0.0), c(1e-3, 0.0), c(10.0, 0.0)).unwrap();
        assert!((r.w1 * r.w2 - c(1.0, 0.0)).norm() < 1e-15);
        let sum = -2.0 * c(10.0, 0.0) / r.sqrt_ab;
        assert!((r.w1 + r.w2 - sum).norm() / sum.norm() < 1e-15);
    }

    #[test]
    fn zero_product_rejected() {
        assert_eq!(omega_roots(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)), Err(Error::ZeroProduct));
    }
}
