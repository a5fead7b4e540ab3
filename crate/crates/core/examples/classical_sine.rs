//! `f = sin z` solves `f(z)^2 + f(z + π/2)^2 = 1`.

use std::f64::consts::FRAC_PI_2;

use fermat_forge::solutions::{ClassicalParams, ConstructRequest};
use fermat_forge::{Cx, Result, SampleConfig};

fn main() -> Result<()> {
    let req = ConstructRequest::Classical(ClassicalParams::Sine {
        q: Cx::new(1.0, 0.0),
        c: Cx::new(FRAC_PI_2, 0.0),
        k: 0,
        b: Cx::new(0.0, 0.0),
    });
    let bundle = req.construct()?;
    println!("f = {}", bundle.f);
    let report = bundle.verify(&SampleConfig::default())?;
    println!(
        "passed {} via {:?}, max relative residual {:e}",
        report.passed, report.certificate, report.max_rel_residual
    );
    Ok(())
}
