use serde::{Deserialize, Serialize};

use crate::numeric::cx_finite;
use crate::{Cx, Error, Result};

/// A shift vector `c ∈ ℂⁿ`, as in `f(z + c)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Cx>", into = "Vec<Cx>")]
pub struct Shift(Vec<Cx>);

impl Shift {
    pub fn new(c: Vec<Cx>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidParams("shift must have at least one component".into()));
        }
        if !c.iter().all(|&x| cx_finite(x)) {
            return Err(Error::NonFinite("shift".into()));
        }
        Ok(Shift(c))
    }

    /// Shift with real components.
    pub fn real(c: &[f64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Cx::new(x, 0.0)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Cx] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == Cx::new(0.0, 0.0))
    }

    pub fn negated(&self) -> Shift {
        Shift(self.0.iter().map(|c| -c).collect())
    }

    pub fn scaled(&self, k: Cx) -> Shift {
        Shift(self.0.iter().map(|c| c * k).collect())
    }

    /// Index of the first non-zero component.
    pub fn pivot(&self) -> Option<usize> {
        self.0.iter().position(|c| *c != Cx::new(0.0, 0.0))
    }
}

impl TryFrom<Vec<Cx>> for Shift {
    type Error = Error;
    fn try_from(v: Vec<Cx>) -> Result<Self> {
        Shift::new(v)
    }
}

impl From<Shift> for Vec<Cx> {
    fn from(s: Shift) -> Self {
        s.0
    }
}

/// Coefficient `K = Π binom(Iₖ, Jₖ) cₖ^{Iₖ−Jₖ}` of the Taylor shift, exact
/// when the shift is Gaussian-integral and the result fits.
pub(crate) enum Kernel {
    Exact(i128, i128),
    Float(Cx),
}

pub(crate) struct ShiftTables {
    binom: Vec<Vec<u128>>,
    gauss: Vec<Vec<Option<(i128, i128)>>>,
    float: Vec<Vec<Cx>>,
}

const GAUSS_LIMIT: f64 = 2147483648.0;
const SPLIT_LIMIT: i128 = 1 << 104;

impl ShiftTables {
    pub(crate) fn new(c: &[Cx], max_exp: &[u32]) -> Self {
        let top = max_exp.iter().copied().max().unwrap_or(0) as usize;
        let mut binom = vec![vec![1u128]];
        for k in 1..=top {
            let prev = &binom[k - 1];
            let mut row = vec![1u128; k + 1];
            for j in 1..k {
                row[j] = prev[j - 1].saturating_add(prev[j]);
            }
            binom.push(row);
        }
        let mut gauss = Vec::with_capacity(c.len());
        let mut float = Vec::with_capacity(c.len());
        for (ck, &m) in c.iter().zip(max_exp) {
            let g = if ck.re.fract() == 0.0
                && ck.im.fract() == 0.0
                && ck.re.abs() < GAUSS_LIMIT
                && ck.im.abs() < GAUSS_LIMIT
            {
                Some((ck.re as i128, ck.im as i128))
            } else {
                None
            };
            let mut gp = vec![Some((1i128, 0i128))];
            let mut fp = vec![Cx::new(1.0, 0.0)];
            for e in 1..=m as usize {
                let next = match (gp[e - 1], g) {
                    (Some(p), Some(q)) => gauss_mul(p, q),
                    _ => None,
                };
                gp.push(next);
                fp.push(fp[e - 1] * ck);
            }
            gauss.push(gp);
            float.push(fp);
        }
        ShiftTables { binom, gauss, float }
    }

    pub(crate) fn kernel(&self, i: &[u32], j: &[u32]) -> Kernel {
        let mut exact = Some((1i128, 0i128));
        for (k, (&ik, &jk)) in i.iter().zip(j).enumerate() {
            let e = (ik - jk) as usize;
            let b = self.binom[ik as usize][jk as usize];
            exact = match (exact, self.gauss[k][e], i128::try_from(b).ok()) {
                (Some(acc), Some(p), Some(b)) => {
                    gauss_mul(acc, p).and_then(|(r, m)| Some((r.checked_mul(b)?, m.checked_mul(b)?)))
                }
                _ => None,
            };
            if exact.is_none() {
                break;
            }
        }
        match exact {
            Some((r, m)) if r.abs() < SPLIT_LIMIT && m.abs() < SPLIT_LIMIT => Kernel::Exact(r, m),
            _ => {
                let mut acc = Cx::new(1.0, 0.0);
                for (k, (&ik, &jk)) in i.iter().zip(j).enumerate() {
                    let b = self.binom[ik as usize][jk as usize] as f64;
                    acc *= self.float[k][(ik - jk) as usize] * b;
                }
                Kernel::Float(acc)
            }
        }
    }
}

fn gauss_mul(a: (i128, i128), b: (i128, i128)) -> Option<(i128, i128)> {
    let re = a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?;
    let im = a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?;
    Some((re, im))
}

/// Split an integer into `hi + lo` with both parts exactly representable.
pub(crate) fn split_i128(k: i128) -> (f64, f64) {
    let hi = k as f64;
    let lo = (k - hi as i128) as f64;
    (hi, lo)
}
