//! Random instances and independent evaluators shared by the integration
//! tests. The evaluators deliberately avoid the crate's own code paths.

#![allow(dead_code)]

use fermat_forge::algebra::{MPoly, Shift};
use fermat_forge::expfun::{ExpPoly, ExpTerm};
use fermat_forge::Cx;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cx(re: f64, im: f64) -> Cx {
    Cx::new(re, im)
}

pub fn re(x: f64) -> Cx {
    Cx::new(x, 0.0)
}

/// Uniform in the square `[-s, s] + i[-s, s]`.
pub fn rand_cx(r: &mut ChaCha8Rng, s: f64) -> Cx {
    cx(r.gen_range(-s..s), r.gen_range(-s..s))
}

/// Modulus in `[lo, hi]`, uniform argument.
pub fn rand_nonzero(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> Cx {
    Cx::from_polar(r.gen_range(lo..hi), r.gen_range(0.0..std::f64::consts::TAU))
}

pub fn rand_point(r: &mut ChaCha8Rng, n: usize, s: f64) -> Vec<Cx> {
    (0..n).map(|_| rand_cx(r, s)).collect()
}

pub fn rand_poly(r: &mut ChaCha8Rng, n: usize, max_deg: u32, n_terms: usize, s: f64) -> MPoly {
    let terms: Vec<(Vec<u32>, Cx)> = (0..n_terms)
        .map(|_| {
            let mut left = r.gen_range(0..=max_deg);
            let exps = (0..n)
                .map(|_| {
                    let e = r.gen_range(0..=left);
                    left -= e;
                    e
                })
                .collect();
            (exps, rand_cx(r, s))
        })
        .collect();
    MPoly::from_terms(n, terms).unwrap()
}

pub fn rand_shift(r: &mut ChaCha8Rng, n: usize, s: f64) -> Shift {
    loop {
        let c = rand_point(r, n, s);
        if let Ok(c) = Shift::new(c) {
            if !c.is_zero() {
                return c;
            }
        }
    }
}

/// Exponential polynomial with `k` terms whose exponents have degree ≤ 2
/// and moderate coefficients, so direct evaluation stays finite.
pub fn rand_exppoly(r: &mut ChaCha8Rng, n: usize, k: usize) -> ExpPoly {
    let terms =
        (0..k).map(|_| ExpTerm { coef: rand_poly(r, n, 2, 3, 1.0), expo: rand_poly(r, n, 2, 3, 0.5) }).collect();
    ExpPoly::from_terms(n, terms).unwrap()
}

/// `Σ c_I z^I` by repeated multiplication.
pub fn naive_eval(p: &MPoly, z: &[Cx]) -> Cx {
    let mut s = Cx::new(0.0, 0.0);
    for (i, c) in p.terms() {
        let mut m = *c;
        for (zj, &e) in z.iter().zip(i.exps()) {
            for _ in 0..e {
                m *= zj;
            }
        }
        s += m;
    }
    s
}

/// `Σ |c_I| |z|^I`, the natural scale for evaluation errors.
pub fn naive_abs(p: &MPoly, z: &[Cx]) -> f64 {
    let mut s = 0.0;
    for (i, c) in p.terms() {
        let mut m = c.norm();
        for (zj, &e) in z.iter().zip(i.exps()) {
            m *= zj.norm().powi(e as i32);
        }
        s += m;
    }
    s
}

pub fn naive_exp_eval(f: &ExpPoly, z: &[Cx]) -> Cx {
    f.terms().iter().map(|t| naive_eval(&t.coef, z) * naive_eval(&t.expo, z).exp()).sum()
}

pub fn naive_exp_abs(f: &ExpPoly, z: &[Cx]) -> f64 {
    f.terms().iter().map(|t| naive_abs(&t.coef, z) * naive_eval(&t.expo, z).re.exp()).sum()
}

pub fn add(z: &[Cx], c: &[Cx]) -> Vec<Cx> {
    z.iter().zip(c).map(|(a, b)| a + b).collect()
}

/// Central difference along `axis`.
pub fn central_diff(f: impl Fn(&[Cx]) -> Cx, z: &[Cx], axis: usize, h: f64) -> Cx {
    let mut zp = z.to_vec();
    let mut zm = z.to_vec();
    zp[axis] += h;
    zm[axis] -= h;
    (f(&zp) - f(&zm)) / (2.0 * h)
}

/// Random homogeneous polynomial of degree `d` in two variables.
pub fn homogeneous(r: &mut ChaCha8Rng, d: u32) -> MPoly {
    MPoly::from_terms(2, (0..=d).map(|i| (vec![i, d - i], rand_nonzero(r, 0.5, 1.5)))).unwrap()
}

/// `(1 + z₁)e^{h_d} + e^{h_{d−1}}`: structural order `d`.
pub fn synthetic(r: &mut ChaCha8Rng, d: u32) -> ExpPoly {
    let mut terms =
        vec![ExpTerm { coef: MPoly::linear(&[re(1.0), re(0.0)], re(1.0)).unwrap(), expo: homogeneous(r, d) }];
    if d > 1 {
        terms.push(ExpTerm { coef: MPoly::one(2), expo: homogeneous(r, d - 1) });
    }
    ExpPoly::from_terms(2, terms).unwrap()
}
