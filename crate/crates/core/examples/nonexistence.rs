//! Diagnose binomial equations whose polynomial factor rules out
//! finite-order solutions.

use fermat_forge::algebra::{MPoly, Shift};
use fermat_forge::equations::{diagnose, EquationSpec};
use fermat_forge::{Cx, Result};

fn main() -> Result<()> {
    let re = |x: f64| Cx::new(x, 0.0);
    let spec = |p: MPoly, a1: f64, a0: f64| -> Result<EquationSpec> {
        Ok(EquationSpec::BinomialDiff {
            a: re(1.0),
            b: re(2.0),
            p,
            q: MPoly::one(2),
            g: MPoly::var(2, 1)?,
            a1: re(a1),
            a0: re(a0),
            c: Shift::real(&[1.0, -1.0])?,
        })
    };
    let linear = MPoly::linear(&[re(1.0), re(2.0)], re(-1.0))?;
    let cases = [
        ("difference operator, deg P = 1", spec(linear.clone(), 1.0, -1.0)?),
        ("general shift, deg P = 1", spec(linear, 3.0, 0.5)?),
        ("constant P", spec(MPoly::constant(2, re(4.0)), 1.0, -1.0)?),
    ];
    for (name, s) in cases {
        let v = diagnose(&s);
        println!("{name}: {:?} ({})", v.kind, v.reason);
        if let Some(cert) = v.certificate {
            println!("  {}", cert.line);
        }
    }
    Ok(())
}
