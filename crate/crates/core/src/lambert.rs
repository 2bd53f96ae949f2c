//! Principal branch `W0` of the Lambert W function on `[0, inf)`.
//!
//! Solves `w e^w = a` with Halley's method. The starting point is
//! `ln(1 + a)` for `a <= e` and the asymptotic `ln a - ln ln a` beyond.

use std::f64::consts::E;

use crate::error::{Error, Result};

const MAX_ITERATIONS: u32 = 64;
const STEP_TOL: f64 = 1e-15;
const RESIDUAL_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertResult {
    pub w: f64,
    pub iterations: u32,
    /// `|w e^w - a|`.
    pub residual: f64,
}

/// `W0(a)` for `a >= 0`.
pub fn lambert_w0(a: f64) -> Result<f64> {
    lambert_w0_detailed(a).map(|r| r.w)
}

/// `W0(a)` with iteration count and final residual.
pub fn lambert_w0_detailed(a: f64) -> Result<LambertResult> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::LambertDomain(a));
    }
    if a == 0.0 {
        return Ok(LambertResult {
            w: 0.0,
            iterations: 0,
            residual: 0.0,
        });
    }

    let mut w = if a <= E {
        a.ln_1p()
    } else {
        let l = a.ln();
        l - l.ln()
    };

    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let ew = w.exp();
        let f = w * ew - a;
        if f == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        // residual relative to `a`, not absolute
        let done_step = step.abs() <= STEP_TOL * w.abs();
        let done_residual = (w * w.exp() - a).abs() <= RESIDUAL_TOL * a;
        if done_step || done_residual {
            break;
        }
    }

    Ok(LambertResult {
        w,
        iterations,
        residual: (w * w.exp() - a).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bisection for `w e^w = a` on `[0, hi]`.
    fn bisect(a: f64) -> f64 {
        let (mut lo, mut hi) = (0.0f64, a.max(1.0).ln() + 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() < a {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(E).unwrap() - 1.0).abs() < 1e-15);
        let omega = lambert_w0(1.0).unwrap();
        assert!((omega - bisect(1.0)).abs() < 1e-13);
        assert!((omega - 0.567_143_290_409_783_8).abs() < 1e-15);
    }

    #[test]
    fn rejects_outside_domain() {
        assert_eq!(lambert_w0(-0.1), Err(Error::LambertDomain(-0.1)));
        assert!(lambert_w0(f64::NAN).is_err());
        assert!(lambert_w0(f64::INFINITY).is_err());
    }

    #[test]
    fn matches_bisection_across_scales() {
        for k in -8..=12 {
            let a = 10f64.powi(k) * 3.7;
            let w = lambert_w0(a).unwrap();
            let reference = bisect(a);
            assert!((w - reference).abs() <= 1e-12 * reference, "a={a}");
        }
    }

    #[test]
    fn converges_quickly() {
        for a in [1e-8, 0.3, 2.0, 40.0, 1e6, 1e12] {
            let r = lambert_w0_detailed(a).unwrap();
            assert!(r.iterations <= 8, "a={a} took {}", r.iterations);
            assert!(r.residual <= 1e-12 * a.max(1.0));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip(exp in -8.0..12.0f64) {
                let a = 10f64.powf(exp);
                let w = lambert_w0(a).unwrap();
                prop_assert!(w >= 0.0);
                prop_assert!((w * w.exp() - a).abs() / a.max(1.0) <= 1e-12);
            }

            #[test]
            fn monotone_and_below_log1p(e1 in -8.0..12.0f64, e2 in -8.0..12.0f64) {
                let (a1, a2) = (10f64.powf(e1), 10f64.powf(e2));
                let (w1, w2) = (lambert_w0(a1).unwrap(), lambert_w0(a2).unwrap());
                if a1 < a2 { prop_assert!(w1 <= w2); }
                prop_assert!(w1 <= a1.ln_1p());
            }
        }
    }
}
