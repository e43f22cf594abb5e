//! Statistical check that the replacement equivalence is a congruence:
//! paths between equivalent terms survive grafting a context on either
//! side, step by step.
//!
//! ```bash
//! cargo run --example congruence_check
//! ```

use magmatic::{self_magmatic, ExplorationCaps, FiniteMagma};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for magma in [FiniteMagma::const0(2)?, FiniteMagma::zn(2)?] {
        let name = magma.name().to_string();
        let ctx = self_magmatic(magma)?;
        let report = ctx.check_congruence(100, ExplorationCaps::new(3, 60), 7)?;
        println!("self-magmatic product of {name}:");
        println!("  trials                = {}", report.trials);
        println!("  lifted paths verified = {}", report.lifted_paths_verified);
        println!("  bfs confirmed         = {}", report.bfs_confirmed);
        println!("  bfs unknown           = {}", report.bfs_unknown);
        println!("  violations            = {}", report.violations.len());
        assert!(report.violations.is_empty());
    }
    Ok(())
}
