//! SNR against transmit power, blockage density and harvesting requirement,
//! all schemes. Writes three CSV files into the directory given as the first
//! argument (default: current directory).
//!
//!     cargo run --example scalar_sweeps -- out/

use std::path::PathBuf;

use pinching_swipt::experiments::{run_sweep, Axis, RunConfig, SweepSpec, SweepVar};
use pinching_swipt::model::dbm_to_watts;
use pinching_swipt::SchemeId;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;

    let defaults = RunConfig::default();
    let mut thirty_dbm = RunConfig::default();
    thirty_dbm.scenario.p_t = dbm_to_watts(30.0);
    thirty_dbm.scenario.q0 = 1e-9;

    let runs = [
        (
            "snr_vs_pt.csv",
            defaults,
            Axis::linear(SweepVar::PtDbm, 10.0, 40.0, 61),
        ),
        (
            "snr_vs_beta.csv",
            thirty_dbm,
            Axis::log(SweepVar::Beta, 1e-4, 1e-1, 61),
        ),
        (
            "snr_vs_q0.csv",
            defaults,
            Axis::log(SweepVar::Q0, 1e-11, 1e-7, 61),
        ),
    ];
    for (file, cfg, axis) in runs {
        let result = run_sweep(&cfg, &SweepSpec::one(axis, &SchemeId::ALL))?;
        let path = dir.join(file);
        result.write_csv(std::fs::File::create(&path)?)?;
        let feasible = result
            .scheme_rows(SchemeId::Proposed)
            .filter(|r| r.solution.is_feasible())
            .count();
        println!(
            "{}: {} rows, proposed feasible at {feasible} points",
            path.display(),
            result.rows.len()
        );
    }
    Ok(())
}
