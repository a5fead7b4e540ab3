use serde::{Deserialize, Serialize};

use crate::algebra::{MPoly, Shift};
use crate::numeric::cx_finite;
use crate::{Cx, Error, Result};

/// `+1` or `−1`, serialised as an integer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The supported equation families; `n` is the length of the shift `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquationSpec {
    /// `a f² + b P² (a₁ f(z+c) + a₀ f)² = Q e^{g}`.
    BinomialDiff { a: Cx, b: Cx, p: MPoly, q: MPoly, g: MPoly, a1: Cx, a0: Cx, c: Shift },
    /// `a f(z+c)² + b P² (∂f/∂z_axis)² = Q e^{g}`, with a 0-based axis.
    Pdde { a: Cx, b: Cx, p: MPoly, q: MPoly, g: MPoly, c: Shift, axis: usize },
    /// `a f² + 2ω f G + b G² = e^{g}` with `G = γ₁ f(z+c) + γ₂ f`.
    Trinomial { a: Cx, b: Cx, omega: Cx, gamma1: Cx, gamma2: Cx, g: MPoly, c: Shift },
    /// `√a f + σ√b G = s e^{g/2}` with `G` as above and signs `σ = sign_b`, `s = sign_rhs`.
    LinearReduced { a: Cx, b: Cx, gamma1: Cx, gamma2: Cx, g: MPoly, c: Shift, sign_b: Sign, sign_rhs: Sign },
}

impl EquationSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            EquationSpec::BinomialDiff { .. } => "binomial_diff",
            EquationSpec::Pdde { .. } => "pdde",
            EquationSpec::Trinomial { .. } => "trinomial",
            EquationSpec::LinearReduced { .. } => "linear_reduced",
        }
    }

    pub fn shift(&self) -> &Shift {
        match self {
            EquationSpec::BinomialDiff { c, .. }
            | EquationSpec::Pdde { c, .. }
            | EquationSpec::Trinomial { c, .. }
            | EquationSpec::LinearReduced { c, .. } => c,
        }
    }

    pub fn n(&self) -> usize {
        self.shift().n()
    }

    pub fn g(&self) -> &MPoly {
        match self {
            EquationSpec::BinomialDiff { g, .. }
            | EquationSpec::Pdde { g, .. }
            | EquationSpec::Trinomial { g, .. }
            | EquationSpec::LinearReduced { g, .. } => g,
        }
    }

    /// Structural checks: matching dimensions, finite scalars, non-zero shift.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.shift().is_zero() {
            return Err(Error::InvalidParams("shift c must be non-zero".into()));
        }
        let (scalars, polys): (Vec<Cx>, Vec<&MPoly>) = match self {
            EquationSpec::BinomialDiff { a, b, p, q, g, a1, a0, .. } => (vec![*a, *b, *a1, *a0], vec![p, q, g]),
            EquationSpec::Pdde { a, b, p, q, g, axis, .. } => {
                if *axis >= n {
                    return Err(Error::AxisOutOfRange { axis: *axis, n });
                }
                (vec![*a, *b], vec![p, q, g])
            }
            EquationSpec::Trinomial { a, b, omega, gamma1, gamma2, g, .. } => {
                (vec![*a, *b, *omega, *gamma1, *gamma2], vec![g])
            }
            EquationSpec::LinearReduced { a, b, gamma1, gamma2, g, .. } => (vec![*a, *b, *gamma1, *gamma2], vec![g]),
        };
        if !scalars.into_iter().all(cx_finite) {
            return Err(Error::NonFinite("equation coefficient".into()));
        }
        for p in polys {
            if p.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.n() });
            }
        }
        Ok(())
    }
}
