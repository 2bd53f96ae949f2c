//! Closed-form joint optimization of antenna position and power-splitting
//! ratio.
//!
//! For a fixed position the best ratio leaves exactly `q0` for harvesting,
//! which turns the average SNR into `lambda (f(x) - q0 / (zeta P_t))`. Since
//! `f` falls strictly with the squared distance `t`, the problem becomes
//! "get as close to the user as the harvesting constraint allows". The
//! constraint `f >= q0 / (zeta P_t)` is equivalent to `t <= t_th` with
//! `t_th = W0(beta eta zeta P_t / q0) / beta`, giving a feasible window of
//! half-width `R = sqrt(t_th - y_u^2 - z_p^2)` around `x_u`, cut to `[0, L]`.

use std::fmt;

use crate::error::Result;
use crate::lambert::lambert_w0;
use crate::model::{average_harvested_power, average_snr, mean_channel_power, SystemParams};

/// Relative slack used by every feasibility membership test.
pub const FEASIBILITY_SLACK: f64 = 1e-10;

/// Ratios at or below this are reported as the degenerate boundary.
pub const DEGENERATE_RHO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Feasible,
    /// The constraint is met only with `rho = 0`, so the SNR is zero.
    DegenerateBoundary,
    Infeasible,
    /// Evaluated without enforcing the harvesting constraint, which it
    /// misses. Only produced by schemes that flag rather than enforce.
    EhViolated,
}

impl Status {
    pub fn token(self) -> &'static str {
        match self {
            Status::Feasible => "feasible",
            Status::DegenerateBoundary => "degenerate",
            Status::Infeasible => "infeasible",
            Status::EhViolated => "eh_violated",
        }
    }

    /// Meets the harvesting requirement (possibly with zero SNR).
    pub fn is_feasible(self) -> bool {
        matches!(self, Status::Feasible | Status::DegenerateBoundary)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A position/ratio pair with its average metrics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingPoint {
    pub x: f64,
    pub rho: f64,
    pub avg_snr: f64,
    /// Average harvested power, W.
    pub avg_eh: f64,
}

impl OperatingPoint {
    pub fn evaluate(params: &SystemParams, x: f64, rho: f64) -> Result<Self> {
        Ok(OperatingPoint {
            x,
            rho,
            avg_snr: average_snr(params, x, rho)?,
            avg_eh: average_harvested_power(params, x, rho)?,
        })
    }

    pub fn meets_requirement(&self, q0: f64) -> bool {
        self.avg_eh >= q0 * (1.0 - FEASIBILITY_SLACK)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solution {
    pub status: Status,
    /// Absent exactly when `status` is `Infeasible`.
    pub point: Option<OperatingPoint>,
}

impl Solution {
    pub fn infeasible() -> Self {
        Solution {
            status: Status::Infeasible,
            point: None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.status.is_feasible()
    }

    pub fn x(&self) -> Option<f64> {
        self.point.map(|p| p.x)
    }

    pub fn rho(&self) -> Option<f64> {
        self.point.map(|p| p.rho)
    }

    pub fn avg_snr(&self) -> Option<f64> {
        self.point.map(|p| p.avg_snr)
    }

    pub fn avg_eh(&self) -> Option<f64> {
        self.point.map(|p| p.avg_eh)
    }

    /// Wraps a point whose ratio came from the harvesting constraint,
    /// collapsing ratios within `DEGENERATE_RHO` of zero onto the boundary.
    pub(crate) fn constrained(params: &SystemParams, x: f64, rho: f64) -> Result<Self> {
        if rho <= DEGENERATE_RHO {
            let point = OperatingPoint::evaluate(params, x, 0.0)?;
            Ok(Solution {
                status: Status::DegenerateBoundary,
                point: Some(OperatingPoint {
                    avg_snr: 0.0,
                    ..point
                }),
            })
        } else {
            Ok(Solution {
                status: Status::Feasible,
                point: Some(OperatingPoint::evaluate(params, x, rho)?),
            })
        }
    }
}

/// Positions meeting the harvesting requirement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityRegion {
    /// Largest admissible squared distance; infinite when the requirement is
    /// vacuous.
    pub t_th: f64,
    /// `t_th - (y_u^2 + z_p^2)`; negative when no position can comply.
    pub r_squared: f64,
    /// `[x_u - R, x_u + R]` intersected with `[0, L]`.
    pub interval: Option<(f64, f64)>,
}

impl FeasibilityRegion {
    /// Half-width `R` of the window around the user; zero if none exists.
    pub fn radius(&self) -> f64 {
        self.r_squared.max(0.0).sqrt()
    }

    pub fn is_empty(&self) -> bool {
        self.interval.is_none()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.interval.is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    /// `true` if this region's interval lies inside `other`'s.
    pub fn is_subset_of(&self, other: &FeasibilityRegion) -> bool {
        match (self.interval, other.interval) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    /// Point of the interval nearest to `x`.
    pub fn project(&self, x: f64) -> Option<f64> {
        self.interval.map(|(lo, hi)| x.clamp(lo, hi))
    }
}

/// Feasible window for an arbitrary channel-power floor `f(x) >= threshold`.
///
/// `threshold = q0 / (zeta P_t)` is the plain harvesting constraint; a fixed
/// ratio `rho` raises it by `1 / (1 - rho)`.
pub fn feasibility_region_for_threshold(
    params: &SystemParams,
    threshold: f64,
) -> Result<FeasibilityRegion> {
    let length = params.length();
    if threshold <= 0.0 {
        return Ok(FeasibilityRegion {
            t_th: f64::INFINITY,
            r_squared: f64::INFINITY,
            interval: Some((0.0, length)),
        });
    }
    if !threshold.is_finite() {
        return Ok(FeasibilityRegion {
            t_th: 0.0,
            r_squared: -params.lateral_offset2(),
            interval: None,
        });
    }

    let beta = params.beta();
    let t_th = lambert_w0(beta * params.eta() / threshold)? / beta;
    let r_squared = t_th - params.lateral_offset2();
    if r_squared < -FEASIBILITY_SLACK * t_th {
        return Ok(FeasibilityRegion {
            t_th,
            r_squared,
            interval: None,
        });
    }

    let radius = r_squared.max(0.0).sqrt();
    let lo = (params.x_u() - radius).max(0.0);
    let hi = (params.x_u() + radius).min(length);
    Ok(FeasibilityRegion {
        t_th,
        r_squared,
        interval: (lo <= hi).then_some((lo, hi)),
    })
}

/// Region where the average harvested power can reach `q0`.
pub fn feasibility_region(params: &SystemParams) -> Result<FeasibilityRegion> {
    feasibility_region_for_threshold(params, params.channel_threshold())
}

/// Largest ratio meeting the harvesting requirement at `x`, or `None` if no
/// ratio does.
pub fn rho_star_given_x(params: &SystemParams, x: f64) -> Result<Option<f64>> {
    let f = mean_channel_power(params, x)?;
    let threshold = params.channel_threshold();
    if f < threshold * (1.0 - FEASIBILITY_SLACK) {
        return Ok(None);
    }
    let mut rho = 1.0 - threshold / f;
    if rho <= 0.0 {
        return Ok(Some(0.0));
    }
    // 1 - rho loses bits when rho is close to one; step down by an ulp until
    // the harvested power evaluates to at least q0
    let harvested = |rho: f64| params.zeta() * (1.0 - rho) * params.p_t() * f;
    for _ in 0..8 {
        if harvested(rho) >= params.q0() {
            break;
        }
        rho = rho.next_down();
    }
    Ok(Some(rho))
}

/// Best achievable average SNR at a fixed position, `lambda (f(x) - q0 /
/// (zeta P_t))`, or `None` where the position cannot meet the requirement.
pub fn snr_envelope(params: &SystemParams, x: f64) -> Result<Option<f64>> {
    let f = mean_channel_power(params, x)?;
    let threshold = params.channel_threshold();
    if f < threshold * (1.0 - FEASIBILITY_SLACK) {
        return Ok(None);
    }
    Ok(Some(params.lambda() * (f - threshold).max(0.0)))
}

/// Globally optimal position and ratio.
pub fn solve(params: &SystemParams) -> Result<Solution> {
    let region = feasibility_region(params)?;
    let Some(x_star) = region.project(params.x_u()) else {
        return Ok(Solution::infeasible());
    };
    // x* lies inside the window, so the ratio only misses the slack test
    // through rounding at the boundary
    let rho = rho_star_given_x(params, x_star)?.unwrap_or(0.0);
    Solution::constrained(params, x_star, rho)
}
