//! Linear equations `√a f + σ√b G = ±e^{g/2}` solved with a periodic factor.

use fermat_forge::fixtures;
use fermat_forge::solutions::ConstructRequest;
use fermat_forge::{Result, SampleConfig};

fn main() -> Result<()> {
    for id in ["rem35-case2-a", "rem35-case2-b", "rem35-case1", "rem35-case3"] {
        let fx = fixtures::find(id).expect("registered fixture");
        let (_, req) = fx.branches()?.remove(0);
        let ConstructRequest::LinearReduction(p) = &req else { unreachable!() };
        let bundle = req.construct()?;
        let report = bundle.verify(&SampleConfig::default())?;
        println!("{id} (exponent case {}): {}", p.case()?, fx.source);
        println!("  f = {}", bundle.f);
        println!("  passed {}, max relative residual {:.1e}", report.passed, report.max_rel_residual);
    }
    Ok(())
}
