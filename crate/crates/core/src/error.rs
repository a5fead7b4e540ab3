use crate::{Cx, LogValue};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("axis {axis} out of range for n = {n}")]
    AxisOutOfRange { axis: usize, n: usize },
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("direction is not periodic: d·c = {pairing}")]
    PeriodicityViolation { pairing: Cx },
    #[error("constant with real part {re} cannot be folded into a coefficient")]
    OverflowInFold { re: f64 },
    #[error("value overflows f64 (log-magnitude {})", .0.logmag)]
    TotalOverflow(LogValue),
    #[error("expected a single exponential term with constant coefficient")]
    NotSingleExponential,
    #[error("the product ab must be non-zero")]
    ZeroProduct,
    #[error("degenerate omega: {0}")]
    DegenerateOmega(String),
    #[error("xi must be non-zero")]
    ZeroXi,
    #[error("target value must be non-zero")]
    ZeroTarget,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("exponents of the two branches coincide")]
    BranchDegenerate,
    #[error("constraint `{name}` violated (relative residual {residual:.3e})")]
    ConstraintViolated { name: String, residual: f64 },
    #[error("denominator vanishes: {0}")]
    DenominatorZero(String),
    #[error("need at least 3 radii with r_max > r_min > 1, got {0}")]
    DegenerateGrid(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}
