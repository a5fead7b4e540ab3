//! Exponential polynomials: arithmetic, log-domain evaluation and zero tests.

use fermat_forge::algebra::{MPoly, Shift};
use fermat_forge::expfun::{zero_test, ExpPoly, SampleConfig};
use fermat_forge::{Cx, Result};

fn main() -> Result<()> {
    let i = Cx::new(0.0, 1.0);
    let z1 = MPoly::var(2, 0)?;
    let h = z1.try_mul(&MPoly::var(2, 1)?)?.try_add(&z1)?;
    // cos h and sin h as sums of e^{±ih}
    let e_pos = ExpPoly::exp(h.scale(i))?;
    let e_neg = ExpPoly::exp(h.scale(-i))?;
    let cos = e_pos.try_add(&e_neg)?.scale(Cx::new(0.5, 0.0));
    let sin = e_pos.try_sub(&e_neg)?.scale(Cx::new(0.0, -0.5));
    println!("cos h = {cos}");
    println!("sin h = {sin}");

    let one = ExpPoly::constant(2, Cx::new(1.0, 0.0));
    let identity = cos.square()?.try_add(&sin.square()?)?.try_sub(&one)?;
    let t = zero_test(&identity, &[&one], &SampleConfig::default())?;
    println!("cos^2 + sin^2 - 1 = {identity}  ({:?})", t.kind);

    let c = Shift::real(&[1.0, 0.5])?;
    println!("shifted sin h = {}", sin.shift(&c)?);
    println!("d/dz2 sin h   = {}", sin.partial(1)?);

    // e^{1000 z1} overflows f64 at z1 = 1 but not in the log domain
    let big = ExpPoly::exp(z1.scale(Cx::new(1000.0, 0.0)))?;
    let v = big.log_eval(&[Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)])?.expect("non-zero");
    println!("log |e^(1000 z1)| at z1 = 1: {}", v.logmag);
    Ok(())
}
