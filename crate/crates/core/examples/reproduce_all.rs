//! Run every registered fixture and print the summary table.

use fermat_forge::cli::table;
use fermat_forge::fixtures::{self, BranchSelect};
use fermat_forge::SampleConfig;

fn main() {
    let cfg = SampleConfig::default();
    let reports: Vec<_> = fixtures::registry().iter().map(|fx| fixtures::run(fx, &cfg, BranchSelect::All)).collect();
    print!("{}", table(&reports));
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        eprintln!("{failed} fixture(s) failed");
        std::process::exit(1);
    }
}
