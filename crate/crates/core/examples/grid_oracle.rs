//! Cross-check of the closed form against brute-force grid search.
//!
//!     cargo run --release --example grid_oracle

use pinching_swipt::{grid_solve, solve, GridSpec, SystemParams};

fn main() -> pinching_swipt::Result<()> {
    let base = SystemParams::default();
    for x_u in [-4.0, 5.0, 21.7, 48.0] {
        let p = base.with(|s| s.x_u = x_u)?;
        let exact = solve(&p)?;
        let analytic = grid_solve(&p, &GridSpec::default())?;
        let joint = grid_solve(&p, &GridSpec::joint(1001, 1001))?;
        println!("x_u = {x_u}");
        for (name, s) in [
            ("closed form", exact),
            ("grid, analytic rho", analytic),
            ("grid, joint", joint),
        ] {
            match s.point {
                Some(pt) => println!(
                    "  {name:<20} x = {:<10.4} rho = {:<10.6} SNR = {:.6e}",
                    pt.x, pt.rho, pt.avg_snr
                ),
                None => println!("  {name:<20} {}", s.status),
            }
        }
    }
    Ok(())
}
