//! Structural order against the numeric max-modulus slope.

use fermat_forge::algebra::MPoly;
use fermat_forge::expfun::{ExpPoly, ExpTerm};
use fermat_forge::growth::{estimate_order, OrderConfig};
use fermat_forge::{Cx, Result};

fn main() -> Result<()> {
    let re = |x: f64| Cx::new(x, 0.0);
    // (1 + z1) e^{z1^3 + z1 z2^2 + 0.7 z2^3} + e^{z1 z2}
    let h3 = MPoly::from_terms(2, [(vec![3, 0], re(1.0)), (vec![1, 2], re(1.0)), (vec![0, 3], re(0.7))])?;
    let h2 = MPoly::from_terms(2, [(vec![1, 1], re(1.0))])?;
    let f = ExpPoly::from_terms(
        2,
        vec![
            ExpTerm { coef: MPoly::linear(&[re(1.0), re(0.0)], re(1.0))?, expo: h3 },
            ExpTerm { coef: MPoly::one(2), expo: h2 },
        ],
    )?;
    let est = estimate_order(&f, &OrderConfig::default())?;
    println!("structural order {}, numeric slope {:.3}", est.structural, est.numeric);
    print!("{}", est.to_csv());
    Ok(())
}
