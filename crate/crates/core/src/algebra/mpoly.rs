use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::shift::{split_i128, Kernel, ShiftTables};
use super::{MIdx, Shift};
use crate::numeric::{cx_finite, fmt_cx, ExactCxSum};
use crate::{Cx, Error, Result, TAU_COEF};

/// Sparse polynomial `Σ c_I z^I` in `n` complex variables.
///
/// Coefficients are finite and non-negligible: after every operation a
/// coefficient is dropped if it is tiny compared with the contributions that
/// produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MPolyRepr", into = "MPolyRepr")]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<MIdx, Cx>,
}

/// Running sums keyed by monomial, each tracking the magnitude of what went in.
pub(crate) struct Accum {
    n: usize,
    map: BTreeMap<MIdx, (Cx, f64)>,
}

impl Accum {
    pub(crate) fn new(n: usize) -> Self {
        Accum { n, map: BTreeMap::new() }
    }

    pub(crate) fn push(&mut self, idx: MIdx, v: Cx) {
        let e = self.map.entry(idx).or_insert((Cx::new(0.0, 0.0), 0.0));
        e.0 += v;
        e.1 += v.norm();
    }

    pub(crate) fn finish(self) -> MPoly {
        MPoly::from_raw(self.n, self.map.into_iter().map(|(i, (v, b))| (i, v, b)))
    }
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Cx) -> Self {
        let mut p = Self::zero(n);
        if c != Cx::new(0.0, 0.0) {
            p.terms.insert(MIdx::zeros(n), c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Cx::new(1.0, 0.0))
    }

    /// The coordinate function `zᵢ` (0-based axis).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::AxisOutOfRange { axis: i, n });
        }
        let mut p = Self::zero(n);
        p.terms.insert(MIdx::unit(n, i), Cx::new(1.0, 0.0));
        Ok(p)
    }

    /// `Σ coeffs[i]·zᵢ + constant`.
    pub fn linear(coeffs: &[Cx], constant: Cx) -> Result<Self> {
        let n = coeffs.len();
        let mut terms = vec![(vec![0; n], constant)];
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            terms.push((e, c));
        }
        Self::from_terms(n, terms)
    }

    /// Build from `(exponents, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Cx)>,
    {
        let mut acc = Accum::new(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.len() });
            }
            if !cx_finite(c) {
                return Err(Error::NonFinite("polynomial coefficient".into()));
            }
            acc.push(MIdx::new(e), c);
        }
        Ok(acc.finish())
    }

    pub(crate) fn from_raw<I>(n: usize, raw: I) -> Self
    where
        I: IntoIterator<Item = (MIdx, Cx, f64)>,
    {
        // a coefficient is noise only relative to what was summed into it;
        // comparing against the largest coefficient would erase the linear
        // part of something like L(z) + s^13
        let terms = raw
            .into_iter()
            .filter(|(_, v, bound)| *v != Cx::new(0.0, 0.0) && v.norm() > TAU_COEF * bound)
            .map(|(i, v, _)| (i, v))
            .collect();
        MPoly { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[allow(clippy::len_without_is_empty)] // is_zero plays that role
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MIdx, &Cx)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Cx {
        self.terms.get(&MIdx::new(exps.to_vec())).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Cx {
        self.coeff(&vec![0; self.n])
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(MIdx::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(MIdx::is_zero)
    }

    /// Coefficients of `z₁, …, zₙ` if the polynomial has degree ≤ 1.
    pub fn linear_coeffs(&self) -> Option<Vec<Cx>> {
        if self.degree() > 1 {
            return None;
        }
        Some((0..self.n).map(|i| self.coeff(MIdx::unit(self.n, i).exps())).collect())
    }

    pub fn without_constant(&self) -> MPoly {
        let mut p = self.clone();
        p.terms.remove(&MIdx::zeros(self.n));
        p
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn check_dim(&self, other: &MPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_dim(other)?;
        let mut acc = Accum::new(self.n);
        for (i, c) in self.terms.iter().chain(other.terms.iter()) {
            acc.push(i.clone(), *c);
        }
        Ok(acc.finish())
    }

    pub fn try_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.try_add(&-other)
    }

    /// Sum of many polynomials with a single cancellation check at the end.
    pub fn sum<'a, I>(n: usize, polys: I) -> Result<MPoly>
    where
        I: IntoIterator<Item = &'a MPoly>,
    {
        let mut acc = Accum::new(n);
        for p in polys {
            if p.n != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.n });
            }
            for (i, c) in &p.terms {
                acc.push(i.clone(), *c);
            }
        }
        Ok(acc.finish())
    }

    pub fn try_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_dim(other)?;
        let mut acc = Accum::new(self.n);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                acc.push(i.plus(j), a * b);
            }
        }
        Ok(acc.finish())
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut out = MPoly::one(self.n);
        for _ in 0..k {
            out = out.try_mul(self).expect("same dimension");
        }
        out
    }

    pub fn scale(&self, k: Cx) -> MPoly {
        MPoly::from_raw(self.n, self.terms.iter().map(|(i, c)| (i.clone(), c * k, 0.0)))
    }

    pub fn add_constant(&self, k: Cx) -> MPoly {
        self.try_add(&MPoly::constant(self.n, k)).expect("same dimension")
    }

    fn check_point(&self, z: &[Cx]) -> Result<()> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: z.len() });
        }
        Ok(())
    }

    fn powers<T: Copy>(&self, z: &[T], one: T, mul: impl Fn(T, T) -> T) -> Vec<Vec<T>> {
        let mut top = vec![0u32; self.n];
        for i in self.terms.keys() {
            for (t, &e) in top.iter_mut().zip(i.exps()) {
                *t = (*t).max(e);
            }
        }
        z.iter()
            .zip(&top)
            .map(|(&x, &m)| {
                let mut v = Vec::with_capacity(m as usize + 1);
                v.push(one);
                for e in 1..=m as usize {
                    v.push(mul(v[e - 1], x));
                }
                v
            })
            .collect()
    }

    pub fn eval(&self, z: &[Cx]) -> Result<Cx> {
        self.check_point(z)?;
        let pw = self.powers(z, Cx::new(1.0, 0.0), |a, b| a * b);
        let mut s = Cx::new(0.0, 0.0);
        for (i, c) in &self.terms {
            let mut m = *c;
            for (k, &e) in i.exps().iter().enumerate() {
                if e > 0 {
                    m *= pw[k][e as usize];
                }
            }
            s += m;
        }
        Ok(s)
    }

    /// `Σ |c_I|·|z^I|`, the natural magnitude scale of an evaluation.
    pub fn abs_eval(&self, z: &[Cx]) -> Result<f64> {
        self.check_point(z)?;
        let mags: Vec<f64> = z.iter().map(|x| x.norm()).collect();
        let pw = self.powers(&mags, 1.0, |a, b| a * b);
        let mut s = 0.0;
        for (i, c) in &self.terms {
            let mut m = c.norm();
            for (k, &e) in i.exps().iter().enumerate() {
                m *= pw[k][e as usize];
            }
            s += m;
        }
        Ok(s)
    }

    /// `p(z + c)` by exact Taylor expansion.
    ///
    /// Each output coefficient is an exactly-rounded sum of exact products
    /// whenever `c` is Gaussian-integral, so periodic polynomials map to
    /// themselves bit for bit.
    pub fn shift(&self, c: &Shift) -> Result<MPoly> {
        if c.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: c.n() });
        }
        let mut top = vec![0u32; self.n];
        for i in self.terms.keys() {
            for (t, &e) in top.iter_mut().zip(i.exps()) {
                *t = (*t).max(e);
            }
        }
        let tables = ShiftTables::new(c.as_slice(), &top);
        let mut sums: BTreeMap<MIdx, ExactCxSum> = BTreeMap::new();
        for (i, a) in &self.terms {
            for j in i.below() {
                let k = tables.kernel(i.exps(), j.exps());
                let s = sums.entry(j).or_default();
                match k {
                    Kernel::Exact(kr, ki) => {
                        let (rh, rl) = split_i128(kr);
                        let (ih, il) = split_i128(ki);
                        for (x, y) in [(a.re, rh), (a.re, rl), (-a.im, ih), (-a.im, il)] {
                            s.re.add_product(x, y);
                        }
                        for (x, y) in [(a.re, ih), (a.re, il), (a.im, rh), (a.im, rl)] {
                            s.im.add_product(x, y);
                        }
                        // products and sum are error-free here, so the
                        // result carries no rounding noise to drop
                    }
                    Kernel::Float(kf) => {
                        s.re.add_product(a.re, kf.re);
                        s.re.add_product(-a.im, kf.im);
                        s.im.add_product(a.re, kf.im);
                        s.im.add_product(a.im, kf.re);
                        s.bound += a.norm() * kf.norm();
                    }
                }
            }
        }
        Ok(MPoly::from_raw(
            self.n,
            sums.into_iter().map(|(j, s)| {
                let v = s.value();
                (j, v, s.bound)
            }),
        ))
    }

    /// `∂p/∂z_axis` (0-based axis).
    pub fn partial(&self, axis: usize) -> Result<MPoly> {
        if axis >= self.n {
            return Err(Error::AxisOutOfRange { axis, n: self.n });
        }
        let mut acc = Accum::new(self.n);
        for (i, c) in &self.terms {
            let e = i.exps()[axis];
            if e > 0 {
                let mut j = i.exps().to_vec();
                j[axis] -= 1;
                acc.push(MIdx::new(j), c * e as f64);
            }
        }
        Ok(acc.finish())
    }

    /// Largest absolute coefficient difference.
    pub fn max_coef_diff(&self, other: &MPoly) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in &self.terms {
            let b = other.terms.get(i).copied().unwrap_or_default();
            worst = worst.max((a - b).norm());
        }
        for (i, b) in &other.terms {
            if !self.terms.contains_key(i) {
                worst = worst.max(b.norm());
            }
        }
        worst
    }

    /// Termwise closeness relative to the larger coefficient scale (floor 1).
    pub fn approx_eq(&self, other: &MPoly, rel: f64) -> bool {
        let scale = self.max_abs().max(other.max_abs()).max(1.0);
        self.n == other.n && self.max_coef_diff(other) <= rel * scale
    }

    /// Total order used for canonical sorting of exponential terms.
    pub fn canonical_cmp(&self, other: &MPoly) -> Ordering {
        for ((i, a), (j, b)) in self.terms.iter().zip(other.terms.iter()) {
            let o = i.cmp(j).then_with(|| a.re.total_cmp(&b.re)).then_with(|| a.im.total_cmp(&b.im));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl std::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { n: self.n, terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect() }
    }
}

impl std::ops::Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: Vec<u32>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct MPolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl TryFrom<MPolyRepr> for MPoly {
    type Error = Error;
    fn try_from(r: MPolyRepr) -> Result<Self> {
        MPoly::from_terms(r.n, r.terms.into_iter().map(|t| (t.exps, Cx::new(t.re, t.im))))
    }
}

impl From<MPoly> for MPolyRepr {
    fn from(p: MPoly) -> Self {
        MPolyRepr {
            n: p.n,
            terms: p.terms.into_iter().map(|(i, c)| TermRepr { exps: i.exps().to_vec(), re: c.re, im: c.im }).collect(),
        }
    }
}

/// Highest degree first, e.g. `2·z1^2·z2 - 3i·z3 + 1`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.exps().cmp(a.exps())));
        for (k, (idx, &c)) in terms.into_iter().enumerate() {
            let negative = c.im == 0.0 && c.re < 0.0 || c.re == 0.0 && c.im < 0.0;
            let mag = if negative { -c } else { c };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = idx
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{e}", i + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_cx(mag))?;
            } else if mag == Cx::new(1.0, 0.0) {
                write!(f, "{}", vars.join("·"))?;
            } else {
                write!(f, "{}·{}", fmt_cx(mag), vars.join("·"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    #[test]
    fn shift_of_square() {
        // (z1 + 1)^2 = z1^2 + 2 z1 + 1
        let p = MPoly::from_terms(1, [(vec![2], c(1.0, 0.0))]).unwrap();
        let q = p.shift(&Shift::real(&[1.0]).unwrap()).unwrap();
        assert_eq!(q.coeff(&[2]), c(1.0, 0.0));
        assert_eq!(q.coeff(&[1]), c(2.0, 0.0));
        assert_eq!(q.coeff(&[0]), c(1.0, 0.0));
    }

    #[test]
    fn cancellation_leaves_no_residue() {
        let a = MPoly::linear(&[c(0.1, 0.0), c(0.7, 0.2)], c(0.3, 0.0)).unwrap();
        let b = a.scale(c(1.0 / 3.0, 0.0)).scale(c(3.0, 0.0));
        assert!(a.try_sub(&b).unwrap().is_zero());
    }

    #[test]
    fn partial_of_monomial() {
        let p = MPoly::from_terms(2, [(vec![3, 2], c(2.0, 1.0))]).unwrap();
        let d = p.partial(1).unwrap();
        assert_eq!(d.coeff(&[3, 1]), c(4.0, 2.0));
        assert_eq!(d.len(), 1);
        assert!(matches!(p.partial(2), Err(Error::AxisOutOfRange { .. })));
    }

    #[test]
    fn json_roundtrip_is_ordered() {
        let p =
            MPoly::from_terms(2, [(vec![0, 2], c(1.0, 0.0)), (vec![0, 0], c(0.5, -1.0)), (vec![1, 0], c(2.0, 0.0))])
                .unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"n":2,"terms":[{"exps":[0,0]"#));
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_bad_json() {
        let bad = r#"{"n":2,"terms":[{"exps":[1],"re":1.0,"im":0.0}]}"#;
        assert!(serde_json::from_str::<MPoly>(bad).is_err());
    }

    #[test]
    fn eval_matches_hand_value() {
        let p = MPoly::from_terms(2, [(vec![1, 1], c(2.0, 0.0)), (vec![0, 0], c(0.0, 1.0))]).unwrap();
        let v = p.eval(&[c(1.0, 1.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(v, c(4.0, 5.0));
    }

    #[test]
    fn display_is_graded_and_signed() {
        let p = MPoly::from_terms(
            2,
            [
                (vec![2, 1], c(2.0, 0.0)),
                (vec![0, 1], c(0.0, -3.0)),
                (vec![0, 0], c(1.0, 0.0)),
                (vec![1, 0], c(1.0, 1.0)),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "2·z1^2·z2 + (1+1i)·z1 - 3i·z2 + 1");
        assert_eq!(MPoly::zero(2).to_string(), "0");
    }
}
