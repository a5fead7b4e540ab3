use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ExpPoly;
use crate::numeric::sample_polydisc;
use crate::{Cx, Result, TAU_RES};

/// Sampling parameters for numeric zero tests.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub radius: f64,
    pub tol: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { samples: 200, seed: 1729, radius: 1.5, tol: TAU_RES }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Normalisation cancelled every term.
    Symbolic,
    /// Terms survive, but every sample is below the relative tolerance.
    Numeric,
    /// At least one sample exceeds the tolerance.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTest {
    pub is_zero: bool,
    pub kind: CertificateKind,
    pub max_rel_residual: f64,
    pub n_points: usize,
    /// Sample with the largest relative residual, when any were taken.
    pub witness: Option<Vec<Cx>>,
}

/// Decide whether `x` vanishes identically.
///
/// At each sampled point the modulus `|x(z)|` is compared with the largest
/// single term of `x` and of every reference expression in `refs`; `x` is
/// accepted as zero if the ratio never exceeds `cfg.tol`.
pub fn zero_test(x: &ExpPoly, refs: &[&ExpPoly], cfg: &SampleConfig) -> Result<ZeroTest> {
    if x.is_zero() {
        return Ok(ZeroTest {
            is_zero: true,
            kind: CertificateKind::Symbolic,
            max_rel_residual: 0.0,
            n_points: 0,
            witness: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst = 0.0f64;
    let mut witness = None;
    for _ in 0..cfg.samples {
        let z = sample_polydisc(&mut rng, x.n(), cfg.radius);
        let rel = match x.log_eval(&z)? {
            None => 0.0,
            Some(v) => {
                let mut scale = x.log_scale(&z)?;
                for r in refs {
                    scale = scale.max(r.log_scale(&z)?);
                }
                (v.logmag - scale).exp()
            }
        };
        if rel > worst || witness.is_none() {
            worst = worst.max(rel);
            witness = Some(z);
        }
    }
    let ok = worst <= cfg.tol;
    Ok(ZeroTest {
        is_zero: ok,
        kind: if ok { CertificateKind::Numeric } else { CertificateKind::Failed },
        max_rel_residual: worst,
        n_points: cfg.samples,
        witness,
    })
}

impl ExpPoly {
    /// Zero test measured against the terms of `self` only.
    pub fn is_zero_numeric(&self, cfg: &SampleConfig) -> Result<ZeroTest> {
        zero_test(self, &[], cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MPoly;

    #[test]
    fn nearby_exponents_are_told_apart() {
        let a = ExpPoly::exp(MPoly::linear(&[Cx::new(1.0, 0.0)], Cx::new(0.0, 0.0)).unwrap()).unwrap();
        let b = ExpPoly::exp(MPoly::linear(&[Cx::new(1.0 + 1e-7, 0.0)], Cx::new(0.0, 0.0)).unwrap()).unwrap();
        let d = a.try_sub(&b).unwrap();
        assert_eq!(d.len(), 2);
        let t = d.is_zero_numeric(&SampleConfig::default()).unwrap();
        assert!(!t.is_zero);
        assert_eq!(t.kind, CertificateKind::Failed);
        assert!(t.witness.is_some());
    }

    #[test]
    fn deterministic_per_seed() {
        let x = ExpPoly::exp(MPoly::var(2, 1).unwrap()).unwrap();
        let cfg = SampleConfig::default();
        assert_eq!(x.is_zero_numeric(&cfg).unwrap(), x.is_zero_numeric(&cfg).unwrap());
    }
}
