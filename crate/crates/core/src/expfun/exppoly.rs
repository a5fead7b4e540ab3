use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Shift};
use crate::numeric::cx_finite;
use crate::{Cx, Error, Result, FOLD_LIMIT, TAU_EXPO};

/// One term `coef(z)·e^{expo(z)}`; after normalisation `expo(0) = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpTerm {
    pub coef: MPoly,
    pub expo: MPoly,
}

/// A value `e^{logmag + i·phase}`, used when the modulus does not fit in f64.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    pub logmag: f64,
    pub phase: f64,
}

impl LogValue {
    pub fn to_cx(self) -> Result<Cx> {
        if self.logmag > f64::MAX.ln() {
            return Err(Error::TotalOverflow(self));
        }
        Ok(Cx::from_polar(self.logmag.exp(), self.phase))
    }
}

/// Canonical exponential polynomial: distinct exponents (up to the merge
/// tolerance), no constant term in any exponent, no zero coefficients,
/// terms sorted by exponent then coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ExpPolyRepr", into = "ExpPolyRepr")]
pub struct ExpPoly {
    n: usize,
    terms: Vec<ExpTerm>,
}

#[derive(Serialize, Deserialize)]
struct ExpPolyRepr {
    n: usize,
    terms: Vec<ExpTerm>,
}

impl TryFrom<ExpPolyRepr> for ExpPoly {
    type Error = Error;
    fn try_from(r: ExpPolyRepr) -> Result<Self> {
        ExpPoly::from_terms(r.n, r.terms)
    }
}

impl From<ExpPoly> for ExpPolyRepr {
    fn from(x: ExpPoly) -> Self {
        ExpPolyRepr { n: x.n, terms: x.terms }
    }
}

fn reduce_phase(t: f64) -> f64 {
    let r = t.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

impl ExpPoly {
    pub fn zero(n: usize) -> Self {
        ExpPoly { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Cx) -> Self {
        Self::from_poly(MPoly::constant(n, c))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.n();
        Self::term(p, MPoly::zero(n)).expect("zero exponent never overflows")
    }

    /// `e^{h}`.
    pub fn exp(h: MPoly) -> Result<Self> {
        let n = h.n();
        Self::term(MPoly::one(n), h)
    }

    pub fn term(coef: MPoly, expo: MPoly) -> Result<Self> {
        let n = coef.n();
        Self::from_terms(n, vec![ExpTerm { coef, expo }])
    }

    /// Normalising constructor.
    pub fn from_terms(n: usize, terms: Vec<ExpTerm>) -> Result<Self> {
        let mut folded: Vec<ExpTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            for p in [&t.coef, &t.expo] {
                if p.n() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: p.n() });
                }
            }
            if t.coef.is_zero() {
                continue;
            }
            let k = t.expo.constant_term();
            let (coef, expo) = if k == Cx::new(0.0, 0.0) {
                (t.coef, t.expo)
            } else {
                if k.re.abs() > FOLD_LIMIT {
                    return Err(Error::OverflowInFold { re: k.re });
                }
                let coef = t.coef.scale(k.exp());
                if coef.terms().any(|(_, c)| !cx_finite(*c)) {
                    return Err(Error::NonFinite("folded coefficient".into()));
                }
                (coef, t.expo.without_constant())
            };
            folded.push(ExpTerm { coef, expo });
        }

        // group exponents that agree up to the merge tolerance
        let mut groups: Vec<(MPoly, Vec<MPoly>)> = Vec::new();
        for t in folded {
            match groups.iter_mut().find(|(e, _)| e.max_coef_diff(&t.expo) <= TAU_EXPO) {
                Some((_, cs)) => cs.push(t.coef),
                None => groups.push((t.expo, vec![t.coef])),
            }
        }
        let mut out = Vec::with_capacity(groups.len());
        for (expo, coefs) in groups {
            let coef = if coefs.len() == 1 { coefs.into_iter().next().unwrap() } else { MPoly::sum(n, coefs.iter())? };
            if !coef.is_zero() {
                out.push(ExpTerm { coef, expo });
            }
        }
        out.sort_by(|a, b| a.expo.canonical_cmp(&b.expo).then_with(|| a.coef.canonical_cmp(&b.coef)));
        Ok(ExpPoly { n, terms: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)] // is_zero plays that role
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree among the exponents.
    pub fn max_expo_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.expo.degree()).max().unwrap_or(0)
    }

    fn check_dim(&self, other: &ExpPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ExpPoly) -> Result<ExpPoly> {
        self.check_dim(other)?;
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Self::from_terms(self.n, terms)
    }

    pub fn try_sub(&self, other: &ExpPoly) -> Result<ExpPoly> {
        self.try_add(&-other)
    }

    /// Sum of many exponential polynomials, normalised once.
    pub fn sum<'a, I>(n: usize, parts: I) -> Result<ExpPoly>
    where
        I: IntoIterator<Item = &'a ExpPoly>,
    {
        let mut terms = Vec::new();
        for p in parts {
            if p.n != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.n });
            }
            terms.extend(p.terms.iter().cloned());
        }
        Self::from_terms(n, terms)
    }

    pub fn try_mul(&self, other: &ExpPoly) -> Result<ExpPoly> {
        self.check_dim(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(ExpTerm { coef: a.coef.try_mul(&b.coef)?, expo: a.expo.try_add(&b.expo)? });
            }
        }
        Self::from_terms(self.n, terms)
    }

    pub fn square(&self) -> Result<ExpPoly> {
        self.try_mul(self)
    }

    pub fn scale(&self, k: Cx) -> ExpPoly {
        let terms = self.terms.iter().map(|t| ExpTerm { coef: t.coef.scale(k), expo: t.expo.clone() }).collect();
        Self::from_terms(self.n, terms).expect("scaling keeps exponents")
    }

    pub fn mul_poly(&self, p: &MPoly) -> Result<ExpPoly> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: p.n() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(ExpTerm { coef: t.coef.try_mul(p)?, expo: t.expo.clone() });
        }
        Self::from_terms(self.n, terms)
    }

    /// `x(z + c)`; constants produced in the exponents are folded.
    pub fn shift(&self, c: &Shift) -> Result<ExpPoly> {
        if c.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: c.n() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(ExpTerm { coef: t.coef.shift(c)?, expo: t.expo.shift(c)? });
        }
        Self::from_terms(self.n, terms)
    }

    /// `∂x/∂z_axis` via `∂(Qe^h) = (∂Q + Q·∂h)e^h`.
    pub fn partial(&self, axis: usize) -> Result<ExpPoly> {
        if axis >= self.n {
            return Err(Error::AxisOutOfRange { axis, n: self.n });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let coef = t.coef.partial(axis)?.try_add(&t.coef.try_mul(&t.expo.partial(axis)?)?)?;
            terms.push(ExpTerm { coef, expo: t.expo.clone() });
        }
        Self::from_terms(self.n, terms)
    }

    /// `e^{h/2}` from `c·e^{h}`, using the principal square root of `c`.
    pub fn halve_exponent(&self) -> Result<ExpPoly> {
        match self.terms.as_slice() {
            [t] if t.coef.is_constant() => {
                Self::term(MPoly::constant(self.n, t.coef.constant_term().sqrt()), t.expo.scale(Cx::new(0.5, 0.0)))
            }
            _ => Err(Error::NotSingleExponential),
        }
    }

    /// Log-domain value; `None` when the sum vanishes exactly.
    pub fn log_eval(&self, z: &[Cx]) -> Result<Option<LogValue>> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: z.len() });
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let q = t.coef.eval(z)?;
            if q == Cx::new(0.0, 0.0) {
                continue;
            }
            let h = t.expo.eval(z)?;
            parts.push((q.norm().ln() + h.re, q.arg() + reduce_phase(h.im)));
        }
        let top = parts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        if parts.is_empty() || !top.is_finite() {
            return Ok(None);
        }
        let s: Cx = parts.iter().map(|&(lm, ph)| Cx::from_polar((lm - top).exp(), ph)).sum();
        if s == Cx::new(0.0, 0.0) {
            return Ok(None);
        }
        Ok(Some(LogValue { logmag: top + s.norm().ln(), phase: reduce_phase(s.arg()) }))
    }

    /// Direct value; overflow is reported with the log-domain value.
    pub fn eval(&self, z: &[Cx]) -> Result<Cx> {
        match self.log_eval(z)? {
            None => Ok(Cx::new(0.0, 0.0)),
            Some(lv) => lv.to_cx(),
        }
    }

    /// `max_j log(Σ|c_I||z^I|) + Re hⱼ(z)`: the log of the largest term
    /// magnitude, measured without cancellation inside coefficients.
    pub fn log_scale(&self, z: &[Cx]) -> Result<f64> {
        let mut top = f64::NEG_INFINITY;
        for t in &self.terms {
            let a = t.coef.abs_eval(z)?;
            if a > 0.0 {
                top = top.max(a.ln() + t.expo.eval(z)?.re);
            }
        }
        Ok(top)
    }
}

impl std::ops::Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            n: self.n,
            terms: self.terms.iter().map(|t| ExpTerm { coef: -&t.coef, expo: t.expo.clone() }).collect(),
        }
    }
}

/// `coef·e^{expo} + ...`; multi-term coefficients are parenthesised.
impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let coef = if t.coef.len() == 1 { t.coef.to_string() } else { format!("({})", t.coef) };
            if t.expo.is_zero() {
                write!(f, "{coef}")?;
            } else {
                write!(f, "{coef}·e^{{{}}}", t.expo)?;
            }
        }
        Ok(())
    }
}
