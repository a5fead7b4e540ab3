//! Trinomial family `2f^2 + 8fG + 3G^2 = e^g` with `G = 5f(z+c) - 3f`.

use std::f64::consts::PI;

use fermat_forge::algebra::{PeriodicPoly, Shift};
use fermat_forge::equations::{omega_roots, Sign};
use fermat_forge::solutions::TrinomialI;
use fermat_forge::{Cx, Result, SampleConfig};

fn main() -> Result<()> {
    let re = |x: f64| Cx::new(x, 0.0);
    let roots = omega_roots(re(2.0), re(3.0), re(4.0))?;
    println!("w1 = {:.6}, w2 = {:.6}", roots.w1.re, roots.w2.re);
    for swap_roots in [false, true] {
        let p = TrinomialI {
            c: Shift::real(&[5.0, 2.0, -3.0])?,
            a: re(2.0),
            b: re(3.0),
            omega: re(4.0),
            gamma1: re(5.0),
            gamma2: re(-3.0),
            // solved from L(c)
            xi: None,
            l: vec![re(3.0), re(-0.4), re(5.0)],
            h: PeriodicPoly { linear: None, direction: None, coeffs: vec![], constant: re(0.0) },
            b3: Cx::new(0.0, 5.0 * PI / 6.0),
            swap_roots,
            xi_sign: Sign::Plus,
        };
        let bundle = p.construct()?;
        let report = bundle.verify(&SampleConfig::default())?;
        println!("swap_roots {swap_roots}: xi = {:.6}, passed {}", bundle.derived["xi"].re, report.passed);
        println!("  f = {}", bundle.f);
    }
    Ok(())
}
