//! Two-exponential solution of `f(z+c)^2 + (∂f/∂z1)^2 = 1` in two variables.

use std::f64::consts::PI;

use fermat_forge::algebra::Shift;
use fermat_forge::solutions::PddeI;
use fermat_forge::{Cx, Result, SampleConfig};

fn main() -> Result<()> {
    let p = PddeI {
        c: Shift::real(&[PI, 1.0])?,
        a: Cx::new(1.0, 0.0),
        b: Cx::new(1.0, 0.0),
        axis: 0,
        h1: vec![Cx::new(0.0, 1.0), Cx::new(0.3, 0.0)],
        r1: Cx::new(0.0, 0.0),
        h2: vec![Cx::new(0.0, -1.0), Cx::new(0.0, 0.0)],
        r2: Cx::new(0.0, 0.0),
        alpha1: Cx::new(1.0, 0.0),
        alpha2: Cx::new(1.0, 0.0),
    };
    // pick h1 along z2 so that the shift condition holds on log branch 0
    let p = p.with_compatible_h1(0)?;
    println!("h1 = ({}, {})", p.h1[0], p.h1[1]);
    let bundle = p.construct()?;
    println!("f = {}", bundle.f);
    let report = bundle.verify(&SampleConfig::default())?;
    println!("passed {}, max relative residual {:.2e}", report.passed, report.max_rel_residual);
    Ok(())
}
