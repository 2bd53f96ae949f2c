//! Simulated blockage at the optimum versus the analytical averages.
//!
//!     cargo run --release --example blockage_montecarlo

use pinching_swipt::experiments::{montecarlo_report, RunConfig};

fn main() -> pinching_swipt::Result<()> {
    for seed in [1, 2, 3] {
        let cfg = RunConfig {
            seed,
            ..RunConfig::default()
        };
        match montecarlo_report(&cfg, 1_000_000)? {
            Some(report) => print!("{}", report.summary()),
            None => println!("seed {seed}: infeasible"),
        }
    }
    Ok(())
}
