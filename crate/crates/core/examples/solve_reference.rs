//! Closed-form optimum for the reference scenario and a few variations.
//!
//!     cargo run --example solve_reference

use pinching_swipt::model::to_db;
use pinching_swipt::{feasibility_region, solve, SystemParams};

fn main() -> pinching_swipt::Result<()> {
    let base = SystemParams::default();
    let cases = [
        ("reference", base),
        ("q0 = 0", base.with(|s| s.q0 = 0.0)?),
        ("beta = 1e-4", base.with(|s| s.beta = 1e-4)?),
        ("user at x = -6", base.with(|s| s.x_u = -6.0)?),
        ("q0 = 1e-4", base.with(|s| s.q0 = 1e-4)?),
    ];

    println!(
        "{:<16} {:>11} {:>9} {:>10} {:>9} {:>10} {:>8}",
        "case", "status", "x*", "rho*", "SNR dB", "t_th", "R"
    );
    for (name, p) in cases {
        let region = feasibility_region(&p)?;
        let sol = solve(&p)?;
        let show =
            |v: Option<f64>, prec: usize| v.map_or("-".to_string(), |v| format!("{v:.prec$}"));
        println!(
            "{:<16} {:>11} {:>9} {:>10} {:>9} {:>10.3} {:>8.3}",
            name,
            sol.status,
            show(sol.x(), 3),
            show(sol.rho(), 6),
            show(sol.avg_snr().map(to_db), 2),
            region.t_th,
            region.radius(),
        );
    }
    Ok(())
}
