//! Constructors for the solution families, with their side conditions.
//!
//! Each constructor validates the conditions its family imposes and returns
//! a [`SolutionBundle`] carrying `f`, `g`, the derived constants, the checks
//! it ran and the equation `f` should satisfy.

mod binomial;
mod bundle;
pub mod classical;
mod linear;
mod pdde;
mod solvers;
mod trinomial;

use serde::{Deserialize, Serialize};

pub use binomial::{BinomialI, BinomialII};
pub use bundle::{Check, SolutionBundle};
pub use classical::ClassicalParams;
pub use linear::LinearReduction;
pub use pdde::{PddeI, PddeII};
pub use solvers::{solve_linear_exponent, solve_xi, solve_xi_with, xi_relation, ConstraintSolveResult};
pub use trinomial::{required_exponentials, OmegaZeroI, OmegaZeroII, TrinomialI, TrinomialII};

use crate::algebra::{MPoly, Shift};
use crate::{Cx, Error, Result};

/// Constructor selection plus parameters, as read by the `construct` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "theorem", content = "params", rename_all = "kebab-case")]
pub enum ConstructRequest {
    BinomialI(BinomialI),
    BinomialIi(BinomialII),
    PddeI(PddeI),
    PddeIi(PddeII),
    TrinomialI(TrinomialI),
    TrinomialIi(TrinomialII),
    OmegaZeroI(OmegaZeroI),
    OmegaZeroIi(OmegaZeroII),
    LinearReduction(LinearReduction),
    Classical(ClassicalParams),
}

impl ConstructRequest {
    pub fn construct(&self) -> Result<SolutionBundle> {
        match self {
            ConstructRequest::BinomialI(p) => p.construct(),
            ConstructRequest::BinomialIi(p) => p.construct(),
            ConstructRequest::PddeI(p) => p.construct(),
            ConstructRequest::PddeIi(p) => p.construct(),
            ConstructRequest::TrinomialI(p) => p.construct(),
            ConstructRequest::TrinomialIi(p) => p.construct(),
            ConstructRequest::OmegaZeroI(p) => p.construct(),
            ConstructRequest::OmegaZeroIi(p) => p.construct(),
            ConstructRequest::LinearReduction(p) => p.construct(),
            ConstructRequest::Classical(p) => classical::construct(p),
        }
    }

    /// Tag of the constructor arm, as written in JSON.
    pub fn arm(&self) -> &'static str {
        match self {
            ConstructRequest::BinomialI(_) => "binomial-i",
            ConstructRequest::BinomialIi(_) => "binomial-ii",
            ConstructRequest::PddeI(_) => "pdde-i",
            ConstructRequest::PddeIi(_) => "pdde-ii",
            ConstructRequest::TrinomialI(_) => "trinomial-i",
            ConstructRequest::TrinomialIi(_) => "trinomial-ii",
            ConstructRequest::OmegaZeroI(_) => "omega-zero-i",
            ConstructRequest::OmegaZeroIi(_) => "omega-zero-ii",
            ConstructRequest::LinearReduction(_) => "linear-reduction",
            ConstructRequest::Classical(ClassicalParams::Sine { .. }) => "classical-sine",
            ConstructRequest::Classical(ClassicalParams::CosSinPair { .. }) => "classical-pair",
        }
    }
}

pub(crate) fn check_len(v: &[Cx], n: usize, what: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::InvalidParams(format!("{what} has length {}, expected {n}", v.len())));
    }
    Ok(())
}

/// Relative coefficient distance between `p(z+c)` and `p`; zero for exact
/// periodic polynomials over Gaussian-integral shifts.
pub(crate) fn fixed_point_gap(p: &MPoly, c: &Shift) -> Result<f64> {
    Ok(p.shift(c)?.max_coef_diff(p) / p.max_abs().max(1.0))
}
