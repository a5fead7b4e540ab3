//! Floating-point helpers: error-free products and exactly-rounded sums.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::Cx;

/// `a*b = p + e` exactly, with `p` the rounded product.
pub(crate) fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Shewchuk-style accumulator: keeps a list of non-overlapping partials so
/// the final sum is correctly rounded regardless of cancellation.
#[derive(Debug, Default, Clone)]
pub(crate) struct ExactSum {
    partials: Vec<f64>,
}

impl ExactSum {
    pub(crate) fn add(&mut self, mut x: f64) {
        let mut i = 0;
        for j in 0..self.partials.len() {
            let mut y = self.partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.partials[i] = lo;
                i += 1;
            }
            x = hi;
        }
        self.partials.truncate(i);
        self.partials.push(x);
    }

    pub(crate) fn add_product(&mut self, a: f64, b: f64) {
        let (p, e) = two_product(a, b);
        self.add(p);
        if e != 0.0 {
            self.add(e);
        }
    }

    pub(crate) fn value(&self) -> f64 {
        let p = &self.partials;
        let Some(mut n) = p.len().checked_sub(1) else {
            return 0.0;
        };
        let mut hi = p[n];
        let mut lo = 0.0;
        while n > 0 {
            let x = hi;
            n -= 1;
            let y = p[n];
            hi = x + y;
            let yr = hi - x;
            lo = y - yr;
            if lo != 0.0 {
                break;
            }
        }
        // round-half-even correction, as in the classic fsum
        if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
        hi
    }
}

/// Complex pair of exact accumulators plus a running magnitude bound.
#[derive(Debug, Default, Clone)]
pub(crate) struct ExactCxSum {
    pub(crate) re: ExactSum,
    pub(crate) im: ExactSum,
    pub(crate) bound: f64,
}

impl ExactCxSum {
    pub(crate) fn value(&self) -> Cx {
        Cx::new(self.re.value(), self.im.value())
    }
}

pub(crate) fn cx_finite(c: Cx) -> bool {
    c.re.is_finite() && c.im.is_finite()
}

/// Uniform point in the polydisc of the given radius.
pub(crate) fn sample_polydisc(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<Cx> {
    (0..n)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let t = std::f64::consts::TAU * rng.gen::<f64>();
            Cx::from_polar(r, t)
        })
        .collect()
}

/// Uniform point on the distinguished boundary `|zᵢ| = r`.
pub(crate) fn sample_torus(rng: &mut ChaCha8Rng, n: usize, r: f64) -> Vec<Cx> {
    (0..n).map(|_| Cx::from_polar(r, std::f64::consts::TAU * rng.gen::<f64>())).collect()
}

/// Compact rendering: `3`, `-2i`, `(1.5+2i)`.
/// Rounding noise below 1e-15 of the modulus is not shown.
pub(crate) fn fmt_cx(c: Cx) -> String {
    let noise = 1e-15 * c.norm();
    let c = Cx::new(if c.re.abs() <= noise { 0.0 } else { c.re }, if c.im.abs() <= noise { 0.0 } else { c.im });
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => format!("{}", c.re),
        (true, false) => format!("{}i", c.im),
        _ => format!("({}{:+}i)", c.re, c.im),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sum_survives_cancellation() {
        let mut s = ExactSum::default();
        for x in [1e100, 1.0, -1e100, 1e-30] {
            s.add(x);
        }
        assert_eq!(s.value(), 1.0 + 1e-30);
    }

    #[test]
    fn exact_sum_matches_integer_arithmetic() {
        let mut s = ExactSum::default();
        let mut exact: i128 = 0;
        for k in 0..200i64 {
            let v = (k * 7919 % 1013 - 500) * (1 << 40);
            s.add(v as f64);
            exact += v as i128;
        }
        assert_eq!(s.value(), exact as f64);
    }

    #[test]
    fn product_error_is_exact() {
        let a = 0.1;
        let b = 0.3;
        let mut s = ExactSum::default();
        s.add_product(a, b);
        s.add(-(a * b));
        let (_, e) = two_product(a, b);
        assert_eq!(s.value(), e);
    }
}
