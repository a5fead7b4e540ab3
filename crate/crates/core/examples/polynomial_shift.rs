//! Shifts, partial derivatives and `c`-periodic polynomials.

use fermat_forge::algebra::{make_periodic, MPoly, PeriodicDirection, Shift};
use fermat_forge::{Cx, Result};

fn main() -> Result<()> {
    let re = |x: f64| Cx::new(x, 0.0);
    // p = z1^3 z2 + 2 z2^2 - z3
    let p = MPoly::from_terms(3, [(vec![3, 1, 0], re(1.0)), (vec![0, 2, 0], re(2.0)), (vec![0, 0, 1], re(-1.0))])?;
    let c = Shift::real(&[2.0, -1.0, 3.0])?;
    println!("p(z)       = {p}");
    println!("p(z + c)   = {}", p.shift(&c)?);
    println!("dp/dz1     = {}", p.partial(0)?);

    let z = [re(0.3), Cx::new(-0.2, 0.5), re(1.1)];
    let zc: Vec<Cx> = z.iter().zip(c.as_slice()).map(|(a, b)| a + b).collect();
    println!("p(z+c) at z vs p at z+c: {} / {}", p.shift(&c)?.eval(&z)?, p.eval(&zc)?);

    // H(d·z) with d·c = 0 is unchanged by the shift
    let d = PeriodicDirection::structured(&c, 0, 1)?;
    let h = make_periodic(d.direction(), &c, &[re(0.0), re(1.0), re(0.5), re(0.25)])?;
    println!("H(z)       = {h}");
    println!("H(z+c) - H = {}", h.shift(&c)?.try_sub(&h)?);
    Ok(())
}
