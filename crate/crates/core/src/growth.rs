//! Growth order of exponential polynomials: read off the exponents, or
//! estimated from the maximum modulus on a grid of radii.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::expfun::ExpPoly;
use crate::numeric::sample_torus;
use crate::{Error, Result, SchemaTag};

/// Largest total degree of an exponent; 0 for a polynomial.
pub fn structural_order(f: &ExpPoly) -> u32 {
    f.max_expo_degree()
}

/// Geometric grid of radii and the sampling done on each.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub n_radii: usize,
    pub samples_per_radius: usize,
    pub seed: u64,
}

impl Default for OrderConfig {
    fn default() -> Self {
        OrderConfig { r_min: 2.0, r_max: 20.0, n_radii: 12, samples_per_radius: 512, seed: 1729 }
    }
}

impl OrderConfig {
    pub fn radii(&self) -> Result<Vec<f64>> {
        if self.n_radii < 3 {
            return Err(Error::DegenerateGrid(format!("need at least 3 radii, got {}", self.n_radii)));
        }
        if !(self.r_min > 1.0 && self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(Error::DegenerateGrid(format!("need 1 < r_min < r_max, got [{}, {}]", self.r_min, self.r_max)));
        }
        if self.samples_per_radius == 0 {
            return Err(Error::DegenerateGrid("samples_per_radius must be positive".into()));
        }
        let ratio = (self.r_max / self.r_min).ln() / (self.n_radii - 1) as f64;
        Ok((0..self.n_radii).map(|k| self.r_min * (ratio * k as f64).exp()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderEstimate {
    pub schema: SchemaTag,
    pub structural: u32,
    /// Least-squares slope of `log log M̂(r)` against `log r`.
    pub numeric: f64,
    /// `(log r, log log M̂(r))` for every radius with `M̂(r) > e`.
    pub slope_points: Vec<(f64, f64)>,
    pub r_grid: OrderConfig,
    pub seed: u64,
}

impl OrderEstimate {
    /// `r,loglog_m` rows for plotting.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,loglog_m\n");
        for (lr, llm) in &self.slope_points {
            let _ = writeln!(out, "{},{}", lr.exp(), llm);
        }
        out
    }
}

/// `log M̂(r)`: the largest `log|f|` over random points of the torus
/// `|z₁| = … = |zₙ| = r`.
pub fn log_max_modulus(f: &ExpPoly, r: f64, samples: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut best = f64::NEG_INFINITY;
    for _ in 0..samples {
        let z = sample_torus(rng, f.n(), r);
        if let Some(v) = f.log_eval(&z)? {
            best = best.max(v.logmag);
        }
    }
    Ok(best)
}

pub fn estimate_order(f: &ExpPoly, cfg: &OrderConfig) -> Result<OrderEstimate> {
    if f.is_zero() {
        return Err(Error::InvalidParams("order of the zero function is undefined".into()));
    }
    let radii = cfg.radii()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points = Vec::new();
    for r in radii {
        let lm = log_max_modulus(f, r, cfg.samples_per_radius, &mut rng)?;
        // log log M is only meaningful once M exceeds e
        if lm > 1.0 && lm.is_finite() {
            points.push((r.ln(), lm.ln()));
        }
    }
    let numeric = if points.len() >= 2 { ls_slope(&points) } else { 0.0 };
    Ok(OrderEstimate {
        schema: SchemaTag,
        structural: structural_order(f),
        numeric,
        slope_points: points,
        r_grid: *cfg,
        seed: cfg.seed,
    })
}

fn ls_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MPoly;
    use crate::Cx;

    fn exp_of(h: MPoly) -> ExpPoly {
        ExpPoly::exp(h).unwrap()
    }

    #[test]
    fn structural_order_of_simple_functions() {
        assert_eq!(structural_order(&ExpPoly::constant(2, Cx::new(3.0, 0.0))), 0);
        let h = MPoly::from_terms(2, [(vec![1, 1], Cx::new(1.0, 0.0))]).unwrap();
        assert_eq!(structural_order(&exp_of(h)), 2);
    }

    #[test]
    fn exp_z_has_order_one() {
        let f = exp_of(MPoly::var(1, 0).unwrap());
        let cfg = OrderConfig { r_max: 50.0, ..OrderConfig::default() };
        let est = estimate_order(&f, &cfg).unwrap();
        assert!((est.numeric - 1.0).abs() < 0.1, "{}", est.numeric);
    }

    #[test]
    fn grid_needs_three_radii() {
        let f = exp_of(MPoly::var(1, 0).unwrap());
        let cfg = OrderConfig { n_radii: 2, ..OrderConfig::default() };
        assert!(matches!(estimate_order(&f, &cfg), Err(Error::DegenerateGrid(_))));
    }

    #[test]
    fn same_seed_same_estimate() {
        let h = MPoly::from_terms(2, [(vec![2, 0], Cx::new(1.0, 0.0)), (vec![0, 1], Cx::new(0.0, 1.0))]).unwrap();
        let f = exp_of(h);
        let a = estimate_order(&f, &OrderConfig::default()).unwrap();
        let b = estimate_order(&f, &OrderConfig::default()).unwrap();
        assert_eq!(a, b);
    }
}
