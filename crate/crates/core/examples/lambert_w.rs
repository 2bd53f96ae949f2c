//! Principal-branch Lambert W evaluations with iteration counts.
//!
//!     cargo run --example lambert_w

use pinching_swipt::lambert::lambert_w0_detailed;

fn main() -> pinching_swipt::Result<()> {
    println!(
        "{:>10} {:>22} {:>5} {:>12}",
        "a", "W0(a)", "iter", "residual"
    );
    for a in [
        0.0,
        1e-8,
        1e-3,
        0.5,
        1.0,
        std::f64::consts::E,
        10.0,
        1e3,
        1e6,
        1e12,
    ] {
        let r = lambert_w0_detailed(a)?;
        println!(
            "{a:>10.3e} {:>22.17} {:>5} {:>12.3e}",
            r.w, r.iterations, r.residual
        );
    }
    Ok(())
}
