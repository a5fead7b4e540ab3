use super::EquationSpec;
use crate::expfun::ExpPoly;
use crate::{Error, Result};

/// The additive pieces `LHS₁, LHS₂, …, −RHS` of the equation at `f`.
///
/// Their sum is the residual; verification also uses them as the magnitude
/// reference, so cancellation between large pieces is measured against the
/// pieces themselves.
pub fn residual_parts(spec: &EquationSpec, f: &ExpPoly) -> Result<Vec<ExpPoly>> {
    spec.validate()?;
    let n = spec.n();
    if f.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.n() });
    }
    let c = spec.shift();
    match spec {
        EquationSpec::BinomialDiff { a, b, p, q, g, a1, a0, .. } => {
            let lf = f.shift(c)?.scale(*a1).try_add(&f.scale(*a0))?;
            Ok(vec![
                f.square()?.scale(*a),
                lf.square()?.mul_poly(&p.try_mul(p)?)?.scale(*b),
                -&ExpPoly::term(q.clone(), g.clone())?,
            ])
        }
        EquationSpec::Pdde { a, b, p, q, g, axis, .. } => {
            let d = f.partial(*axis)?;
            Ok(vec![
                f.shift(c)?.square()?.scale(*a),
                d.square()?.mul_poly(&p.try_mul(p)?)?.scale(*b),
                -&ExpPoly::term(q.clone(), g.clone())?,
            ])
        }
        EquationSpec::Trinomial { a, b, omega, gamma1, gamma2, g, .. } => {
            let gf = f.shift(c)?.scale(*gamma1).try_add(&f.scale(*gamma2))?;
            Ok(vec![
                f.square()?.scale(*a),
                f.try_mul(&gf)?.scale(2.0 * omega),
                gf.square()?.scale(*b),
                -&ExpPoly::exp(g.clone())?,
            ])
        }
        EquationSpec::LinearReduced { a, b, gamma1, gamma2, g, sign_b, sign_rhs, .. } => {
            let gf = f.shift(c)?.scale(*gamma1).try_add(&f.scale(*gamma2))?;
            let rhs = ExpPoly::exp(g.clone())?.halve_exponent()?;
            Ok(vec![f.scale(a.sqrt()), gf.scale(b.sqrt() * sign_b.value()), rhs.scale((-sign_rhs.value()).into())])
        }
    }
}

/// `LHS − RHS`, normalised.
pub fn residual(spec: &EquationSpec, f: &ExpPoly) -> Result<ExpPoly> {
    let parts = residual_parts(spec, f)?;
    ExpPoly::sum(spec.n(), parts.iter())
}
