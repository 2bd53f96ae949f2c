//! Average SNR against antenna position for three blockage densities
//! (proposed, no-harvesting and fixed-ratio schemes). CSV on stdout with an
//! extra leading `beta` column.
//!
//!     cargo run --example position_sweep > position.csv

use pinching_swipt::experiments::{run_sweep, Axis, RunConfig, SweepSpec, SweepVar};
use pinching_swipt::SchemeId;

fn main() -> pinching_swipt::Result<()> {
    let spec = SweepSpec::one(
        Axis::linear(SweepVar::X, 0.0, 50.0, 501),
        &[SchemeId::Proposed, SchemeId::Bm0, SchemeId::Bm1],
    );
    let mut header = true;
    for beta in [1e-2, 1e-3, 1e-4] {
        let mut cfg = RunConfig::default();
        cfg.scenario.beta = beta;
        let csv = run_sweep(&cfg, &spec)?.to_csv();
        for (i, line) in csv.lines().enumerate() {
            match (i, header) {
                (0, true) => println!("beta,{line}"),
                (0, false) => {}
                _ => println!("{beta:e},{line}"),
            }
        }
        header = false;
    }
    Ok(())
}
