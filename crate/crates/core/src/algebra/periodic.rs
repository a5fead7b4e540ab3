use serde::{Deserialize, Serialize};

use super::{MPoly, Shift};
use crate::numeric::{cx_finite, ExactSum};
use crate::{Cx, Error, Result};

/// `Σ aᵢbᵢ` with each real part accumulated exactly.
pub fn exact_dot(a: &[Cx], b: &[Cx]) -> Cx {
    let mut re = ExactSum::default();
    let mut im = ExactSum::default();
    for (x, y) in a.iter().zip(b) {
        re.add_product(x.re, y.re);
        re.add_product(-x.im, y.im);
        im.add_product(x.re, y.im);
        im.add_product(x.im, y.re);
    }
    Cx::new(re.value(), im.value())
}

/// A direction `d` with `d·c = 0` exactly, so that any polynomial in
/// `s = d·z` is `c`-periodic.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicDirection {
    d: Vec<Cx>,
}

impl PeriodicDirection {
    pub fn new(d: Vec<Cx>, c: &Shift) -> Result<Self> {
        if d.len() != c.n() {
            return Err(Error::DimensionMismatch { expected: c.n(), found: d.len() });
        }
        if !d.iter().all(|&x| cx_finite(x)) {
            return Err(Error::NonFinite("periodic direction".into()));
        }
        let pairing = exact_dot(&d, c.as_slice());
        if pairing != Cx::new(0.0, 0.0) {
            return Err(Error::PeriodicityViolation { pairing });
        }
        Ok(PeriodicDirection { d })
    }

    /// `d = cⱼeᵢ − cᵢeⱼ`, which pairs to zero with `c` by construction.
    pub fn structured(c: &Shift, i: usize, j: usize) -> Result<Self> {
        let n = c.n();
        for axis in [i, j] {
            if axis >= n {
                return Err(Error::AxisOutOfRange { axis, n });
            }
        }
        if i == j {
            return Err(Error::InvalidParams("structured direction needs i ≠ j".into()));
        }
        let mut d = vec![Cx::new(0.0, 0.0); n];
        d[i] = c.as_slice()[j];
        d[j] = -c.as_slice()[i];
        Self::new(d, c)
    }

    pub fn direction(&self) -> &[Cx] {
        &self.d
    }

    /// The linear form `s = d·z`.
    pub fn linear_form(&self) -> MPoly {
        MPoly::linear(&self.d, Cx::new(0.0, 0.0)).expect("finite direction")
    }

    /// `H(s) = Σ coeffs[k]·s^k`, expanded in `z`.
    pub fn compose(&self, coeffs: &[Cx]) -> Result<MPoly> {
        if !coeffs.iter().all(|&x| cx_finite(x)) {
            return Err(Error::NonFinite("periodic coefficients".into()));
        }
        let s = self.linear_form();
        let n = self.d.len();
        let mut acc = MPoly::zero(n);
        for &h in coeffs.iter().rev() {
            acc = acc.try_mul(&s)?.add_constant(h);
        }
        Ok(acc)
    }
}

/// `H(d·z)` for a direction that must satisfy `d·c = 0` exactly.
pub fn make_periodic(d: &[Cx], c: &Shift, coeffs: &[Cx]) -> Result<MPoly> {
    PeriodicDirection::new(d.to_vec(), c)?.compose(coeffs)
}

/// Parameter form of a `c`-periodic polynomial
/// `m·z + H(d·z) + constant` with `m·c = d·c = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodicPoly {
    #[serde(default)]
    pub linear: Option<Vec<Cx>>,
    #[serde(default)]
    pub direction: Option<Vec<Cx>>,
    /// Coefficients of `H`, lowest power first.
    #[serde(default)]
    pub coeffs: Vec<Cx>,
    #[serde(default)]
    pub constant: Cx,
}

impl PeriodicPoly {
    pub fn build(&self, c: &Shift) -> Result<MPoly> {
        let n = c.n();
        let mut p = MPoly::constant(n, self.constant);
        if let Some(m) = &self.linear {
            let dir = PeriodicDirection::new(m.clone(), c)?;
            p = p.try_add(&dir.linear_form())?;
        }
        if !self.coeffs.is_empty() {
            let d = self
                .direction
                .as_ref()
                .ok_or_else(|| Error::InvalidParams("periodic part needs a direction".into()))?;
            p = p.try_add(&make_periodic(d, c, &self.coeffs)?)?;
        }
        if !cx_finite(self.constant) {
            return Err(Error::NonFinite("periodic constant".into()));
        }
        Ok(p)
    }
}
