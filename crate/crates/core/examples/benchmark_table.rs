//! All schemes side by side at a few transmit powers.
//!
//!     cargo run --example benchmark_table

use pinching_swipt::benchmarks::evaluate_all;
use pinching_swipt::model::{dbm_to_watts, to_db};
use pinching_swipt::SystemParams;

fn main() -> pinching_swipt::Result<()> {
    for pt_dbm in [30.0, 36.0, 40.0] {
        let p = SystemParams::default().with(|s| s.p_t = dbm_to_watts(pt_dbm))?;
        println!("P_t = {pt_dbm} dBm");
        for (id, sol) in evaluate_all(&p)? {
            match sol.point {
                Some(pt) => println!(
                    "  {id:<9} {:<12} x = {:>6.2}  rho = {:.4}  SNR = {:>7.2} dB  EH = {:.3e} W",
                    sol.status.token(),
                    pt.x,
                    pt.rho,
                    to_db(pt.avg_snr),
                    pt.avg_eh
                ),
                None => println!("  {id:<9} {}", sol.status),
            }
        }
    }
    Ok(())
}
