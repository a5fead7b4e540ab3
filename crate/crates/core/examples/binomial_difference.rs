//! Rebuild the three-variable binomial example and check its order.

use fermat_forge::fixtures;
use fermat_forge::growth::structural_order;
use fermat_forge::{Result, SampleConfig};

fn main() -> Result<()> {
    let fx = fixtures::find("ex-binomial-1").expect("registered fixture");
    println!("{}", fx.source);
    for (label, req) in fx.branches()? {
        let bundle = req.construct()?;
        let report = bundle.verify(&SampleConfig::default())?;
        println!("branch {label}: {} terms, structural order {}", bundle.f.len(), structural_order(&bundle.f));
        println!("  g has degree {} and {} terms", bundle.g.degree(), bundle.g.len());
        for (name, v) in &bundle.derived {
            println!("  {name} = {v}");
        }
        println!("  passed {}, max relative residual {:.2e}", report.passed, report.max_rel_residual);
    }
    Ok(())
}
