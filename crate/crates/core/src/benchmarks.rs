//! The proposed scheme and the four baselines, expressed as policies.
//!
//! Each scheme picks the position and the ratio either by optimizing or by
//! fixing them, and either enforces, ignores, or merely flags the harvesting
//! requirement:
//!
//! | scheme   | position    | ratio        | requirement |
//! |----------|-------------|--------------|-------------|
//! | proposed | optimized   | optimized    | enforced    |
//! | bm0      | optimized   | 1            | ignored     |
//! | bm1      | optimized   | 0.5          | enforced    |
//! | bm2      | L/2         | optimized    | enforced    |
//! | bm3      | L/2         | 0.5          | flagged     |
//!
//! Sweeps may pin the position or the ratio of any scheme through
//! [`Overrides`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::SystemParams;
use crate::optimizer::{
    feasibility_region_for_threshold, rho_star_given_x, solve, OperatingPoint, Solution, Status,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    Proposed,
    Bm0,
    Bm1,
    Bm2,
    Bm3,
}

impl SchemeId {
    pub const ALL: [SchemeId; 5] = [
        SchemeId::Proposed,
        SchemeId::Bm0,
        SchemeId::Bm1,
        SchemeId::Bm2,
        SchemeId::Bm3,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SchemeId::Proposed => "proposed",
            SchemeId::Bm0 => "bm0",
            SchemeId::Bm1 => "bm1",
            SchemeId::Bm2 => "bm2",
            SchemeId::Bm3 => "bm3",
        }
    }

    pub fn policy(self) -> Policy {
        use Choice::*;
        let (position, ratio, requirement) = match self {
            SchemeId::Proposed => (Optimize, Optimize, Requirement::Enforce),
            SchemeId::Bm0 => (Optimize, Fixed(1.0), Requirement::Ignore),
            SchemeId::Bm1 => (Optimize, Fixed(0.5), Requirement::Enforce),
            SchemeId::Bm2 => (HalfGuide, Optimize, Requirement::Enforce),
            SchemeId::Bm3 => (HalfGuide, Fixed(0.5), Requirement::Flag),
        };
        Policy {
            position,
            ratio,
            requirement,
        }
    }

    /// Parses a comma-separated list such as `proposed,bm0,bm1`.
    pub fn parse_list(s: &str) -> Result<Vec<SchemeId>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeId::ALL
            .into_iter()
            .find(|id| id.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownScheme(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Choice {
    Optimize,
    /// Middle of the waveguide, `L / 2`.
    HalfGuide,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    Enforce,
    Ignore,
    /// Evaluate regardless and report `Status::EhViolated` on a miss.
    Flag,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Policy {
    pub position: Choice,
    pub ratio: Choice,
    pub requirement: Requirement,
}

/// Pins a scheme's position and/or ratio, replacing its own rule.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub x: Option<f64>,
    pub rho: Option<f64>,
}

pub fn evaluate_scheme(params: &SystemParams, scheme: SchemeId) -> Result<Solution> {
    evaluate_policy(params, scheme.policy(), Overrides::default())
}

pub fn evaluate_scheme_with(
    params: &SystemParams,
    scheme: SchemeId,
    overrides: Overrides,
) -> Result<Solution> {
    evaluate_policy(params, scheme.policy(), overrides)
}

/// All schemes at one operating point, in [`SchemeId::ALL`] order.
pub fn evaluate_all(params: &SystemParams) -> Result<Vec<(SchemeId, Solution)>> {
    SchemeId::ALL
        .into_iter()
        .map(|id| evaluate_scheme(params, id).map(|s| (id, s)))
        .collect()
}

fn resolve(choice: Choice, params: &SystemParams) -> Option<f64> {
    match choice {
        Choice::Optimize => None,
        Choice::HalfGuide => Some(params.length() / 2.0),
        Choice::Fixed(v) => Some(v),
    }
}

pub fn evaluate_policy(
    params: &SystemParams,
    policy: Policy,
    overrides: Overrides,
) -> Result<Solution> {
    let x_fixed = overrides.x.or(resolve(policy.position, params));
    let rho_fixed = overrides.rho.or(resolve(policy.ratio, params));
    let enforce = policy.requirement == Requirement::Enforce;

    match (x_fixed, rho_fixed) {
        (None, None) => {
            if enforce {
                solve(params)
            } else {
                let x = params.clamp_to_waveguide(params.x_u());
                finish(params, x, 1.0, policy.requirement)
            }
        }
        (Some(x), None) => {
            if !enforce {
                return finish(params, x, 1.0, policy.requirement);
            }
            match rho_star_given_x(params, x)? {
                Some(rho) => Solution::constrained(params, x, rho),
                None => Ok(Solution::infeasible()),
            }
        }
        (None, Some(rho)) => {
            if !enforce {
                let x = params.clamp_to_waveguide(params.x_u());
                return finish(params, x, rho, policy.requirement);
            }
            // a fixed ratio leaves (1 - rho) of the channel for harvesting,
            // which raises the channel-power floor by 1 / (1 - rho)
            let t = params.channel_threshold();
            let threshold = if t == 0.0 { 0.0 } else { t / (1.0 - rho) };
            let region = feasibility_region_for_threshold(params, threshold)?;
            match region.project(params.x_u()) {
                Some(x) => finish(params, x, rho, Requirement::Ignore),
                None => Ok(Solution::infeasible()),
            }
        }
        (Some(x), Some(rho)) => finish(params, x, rho, policy.requirement),
    }
}

fn finish(params: &SystemParams, x: f64, rho: f64, requirement: Requirement) -> Result<Solution> {
    let point = OperatingPoint::evaluate(params, x, rho)?;
    let meets = point.meets_requirement(params.q0());
    let status = match requirement {
        Requirement::Ignore => Status::Feasible,
        Requirement::Enforce if !meets => return Ok(Solution::infeasible()),
        Requirement::Enforce => Status::Feasible,
        Requirement::Flag if !meets => Status::EhViolated,
        Requirement::Flag => Status::Feasible,
    };
    Ok(Solution {
        status,
        point: Some(point),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::average_snr;
    use crate::optimizer::feasibility_region;

    #[test]
    fn tokens_round_trip() {
        for id in SchemeId::ALL {
            assert_eq!(id.token().parse::<SchemeId>().unwrap(), id);
        }
        assert_eq!(
            SchemeId::parse_list("proposed, bm0,bm1").unwrap(),
            vec![SchemeId::Proposed, SchemeId::Bm0, SchemeId::Bm1]
        );
        assert_eq!(
            "bm9".parse::<SchemeId>(),
            Err(Error::UnknownScheme("bm9".into()))
        );
    }

    #[test]
    fn without_requirement_proposed_equals_bm0() {
        let p = SystemParams::default().with(|s| s.q0 = 0.0).unwrap();
        let a = evaluate_scheme(&p, SchemeId::Proposed).unwrap();
        let b = evaluate_scheme(&p, SchemeId::Bm0).unwrap();
        assert_eq!(a.x(), b.x());
        assert_eq!(a.rho(), Some(1.0));
        assert_eq!(a.avg_snr(), b.avg_snr());
    }

    #[test]
    fn constant_gap_to_bm0_at_defaults() {
        let p = SystemParams::default();
        let prop = evaluate_scheme(&p, SchemeId::Proposed).unwrap();
        let bm0 = evaluate_scheme(&p, SchemeId::Bm0).unwrap();
        assert_eq!(prop.x(), bm0.x());
        let gap = bm0.avg_snr().unwrap() - prop.avg_snr().unwrap();
        let expected = p.lambda() * p.q0() / (p.zeta() * p.p_t());
        assert!(
            (gap - expected).abs() <= 1e-12 * bm0.avg_snr().unwrap(),
            "{gap} {expected}"
        );
    }

    #[test]
    fn baselines_at_defaults() {
        let p = SystemParams::default();
        let sols: Vec<_> = evaluate_all(&p).unwrap();
        let prop = sols[0].1.avg_snr().unwrap();
        for (id, sol) in &sols[2..] {
            if sol.is_feasible() {
                assert!(prop >= sol.avg_snr().unwrap(), "{id}");
            }
        }

        let bm1 = sols[2].1;
        assert_eq!(bm1.rho(), Some(0.5));
        assert_eq!(bm1.x(), Some(5.0));

        // f(25) is below the floor, so BM2 cannot comply; BM3 is flagged.
        assert_eq!(sols[3].1.status, Status::Infeasible);
        let bm3 = sols[4].1;
        assert_eq!(bm3.status, Status::EhViolated);
        assert_eq!(bm3.x(), Some(25.0));
        assert_eq!(bm3.avg_snr(), Some(average_snr(&p, 25.0, 0.5).unwrap()));
    }

    #[test]
    fn bm1_window_uses_doubled_requirement() {
        let p = SystemParams::default().with(|s| s.x_u = -5.0).unwrap();
        let bm1 = evaluate_scheme(&p, SchemeId::Bm1).unwrap();
        let doubled = p.with(|s| s.q0 *= 2.0).unwrap();
        let region = feasibility_region(&doubled).unwrap();
        assert_eq!(bm1.x(), region.project(p.x_u()));
        assert!(region.is_subset_of(&feasibility_region(&p).unwrap()));
        assert!(bm1.avg_eh().unwrap() >= p.q0() * (1.0 - 1e-10));
    }

    #[test]
    fn bm2_optimizes_ratio_at_midpoint() {
        let p = SystemParams::default()
            .with(|s| {
                s.x_u = 25.0;
                s.q0 = 1e-9;
            })
            .unwrap();
        let bm2 = evaluate_scheme(&p, SchemeId::Bm2).unwrap();
        assert_eq!(bm2.x(), Some(25.0));
        assert_eq!(bm2.rho(), rho_star_given_x(&p, 25.0).unwrap());
        let prop = evaluate_scheme(&p, SchemeId::Proposed).unwrap();
        assert_eq!(prop.avg_snr(), bm2.avg_snr());
    }

    #[test]
    fn overrides_pin_position_and_ratio() {
        let p = SystemParams::default();
        let at = |id, x, rho| evaluate_scheme_with(&p, id, Overrides { x, rho }).unwrap();
        // pinned x: proposed picks the per-position optimum
        let s = at(SchemeId::Proposed, Some(10.0), None);
        assert_eq!(s.rho(), rho_star_given_x(&p, 10.0).unwrap());
        // pinned x outside the window
        assert_eq!(
            at(SchemeId::Proposed, Some(40.0), None).status,
            Status::Infeasible
        );
        assert_eq!(at(SchemeId::Bm0, Some(40.0), None).status, Status::Feasible);
        // pinned both, too greedy a ratio
        assert_eq!(
            at(SchemeId::Proposed, Some(5.0), Some(0.9)).status,
            Status::Infeasible
        );
        assert_eq!(
            at(SchemeId::Bm3, Some(5.0), Some(0.9)).status,
            Status::EhViolated
        );
        assert_eq!(
            at(SchemeId::Bm3, Some(5.0), Some(0.5)).status,
            Status::Feasible
        );
        // pinned ratio of one under an active requirement is never feasible
        assert_eq!(
            at(SchemeId::Proposed, None, Some(1.0)).status,
            Status::Infeasible
        );
    }

    mod props {
        use super::*;
        use crate::model::Scenario;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(256))]
            #[test]
            fn proposed_dominates_feasible_baselines(
                log_beta in -4.0..-1.0f64,
                log_q0 in -12.0..-6.0f64,
                x_u in -10.0..60.0f64,
                z_p in 1.0..20.0f64,
                pt in 10.0..40.0f64,
            ) {
                let p = SystemParams::new(Scenario {
                    beta: 10f64.powf(log_beta),
                    q0: 10f64.powf(log_q0),
                    x_u,
                    z_p,
                    p_t: crate::model::dbm_to_watts(pt),
                    ..Default::default()
                }).unwrap();
                let prop = evaluate_scheme(&p, SchemeId::Proposed).unwrap();
                for id in [SchemeId::Bm1, SchemeId::Bm2, SchemeId::Bm3] {
                    let s = evaluate_scheme(&p, id).unwrap();
                    if s.is_feasible() {
                        prop_assert!(prop.is_feasible());
                        prop_assert!(prop.avg_snr().unwrap() >= s.avg_snr().unwrap() * (1.0 - 1e-12));
                    }
                }
                let r1 = feasibility_region_for_threshold(&p, 2.0 * p.channel_threshold()).unwrap();
                prop_assert!(r1.is_subset_of(&feasibility_region(&p).unwrap()));
            }
        }
    }
}
