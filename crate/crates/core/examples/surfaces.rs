//! Two-variable SNR surfaces for the proposed scheme: (x, rho) at beta =
//! 1e-3, (P_t, q0) at beta = 1e-2, and (x_u, z_p). Writes CSV files into the
//! directory given as the first argument.
//!
//!     cargo run --release --example surfaces -- out/

use std::path::PathBuf;

use pinching_swipt::experiments::{run_sweep, Axis, RunConfig, SweepSpec, SweepVar};
use pinching_swipt::{solve, SchemeId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;

    let defaults = RunConfig::default();
    let mut dense = RunConfig::default();
    dense.scenario.beta = 1e-2;

    let runs = [
        (
            "snr_x_rho.csv",
            defaults,
            Axis::linear(SweepVar::X, 0.0, 50.0, 201),
            Axis::linear(SweepVar::Rho, 0.0, 1.0, 201),
        ),
        (
            "snr_pt_q0.csv",
            dense,
            Axis::linear(SweepVar::PtDbm, 10.0, 50.0, 81),
            Axis::log(SweepVar::Q0, 1e-11, 1e-7, 81),
        ),
        (
            "snr_xu_zp.csv",
            defaults,
            Axis::linear(SweepVar::Xu, 0.0, 50.0, 101),
            Axis::linear(SweepVar::Zp, 1.0, 30.0, 59),
        ),
    ];
    for (file, cfg, a, b) in runs {
        let result = run_sweep(&cfg, &SweepSpec::two(a, b, &[SchemeId::Proposed]))?;
        let path = dir.join(file);
        result.write_csv(std::fs::File::create(&path)?)?;
        println!("{}: {} cells", path.display(), result.rows.len());
    }

    let best = solve(&defaults.params()?)?;
    println!(
        "closed-form optimum for the (x, rho) surface: {:?}",
        best.point
    );
    Ok(())
}
