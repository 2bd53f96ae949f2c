//! System parameters and the deterministic channel and average-metric model.
//!
//! The antenna slides along a waveguide at height `z_p`; the user sits at
//! `(x_u, y_u, 0)`. The LoS link is free-space with gain `eta / d^2`, and it
//! survives blockage with probability `exp(-beta * d^2)`. Everything here is
//! in SI units (watts, hertz, meters); conversion from dBm happens at the edges.

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Converts a power in dBm to watts.
pub fn dbm_to_watts(p_dbm: f64) -> f64 {
    10f64.powf((p_dbm - 30.0) / 10.0)
}

/// Converts a power in watts to dBm.
pub fn watts_to_dbm(p_watts: f64) -> f64 {
    10.0 * p_watts.log10() + 30.0
}

/// Linear ratio to decibels.
pub fn to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Raw, unvalidated scenario description.
///
/// `Default` yields the reference scenario: 28 GHz carrier, 40 dBm transmit
/// power, 1e-11 W noise, 60 % RF-to-DC efficiency, a 50 m waveguide at 10 m
/// height, the user at (5, 5, 0) m, blockage density 1e-3 and a 1e-8 W
/// harvesting requirement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    /// Carrier frequency, Hz.
    pub f_c: f64,
    /// Transmit power, W.
    pub p_t: f64,
    /// Noise power, W.
    pub sigma2: f64,
    /// RF-to-DC conversion efficiency in (0, 1].
    pub zeta: f64,
    /// Blockage density, 1/m^2.
    pub beta: f64,
    /// Minimum average harvested power, W.
    pub q0: f64,
    /// Waveguide length, m.
    pub length: f64,
    /// Waveguide height, m.
    pub z_p: f64,
    pub x_u: f64,
    pub y_u: f64,
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            f_c: 28e9,
            p_t: dbm_to_watts(40.0),
            sigma2: 1e-11,
            zeta: 0.6,
            beta: 1e-3,
            q0: 1e-8,
            length: 50.0,
            z_p: 10.0,
            x_u: 5.0,
            y_u: 5.0,
        }
    }
}

impl Scenario {
    pub fn validate(self) -> Result<SystemParams> {
        SystemParams::new(self)
    }
}

fn check(name: &'static str, value: f64, ok: bool, reason: &'static str) -> Result<()> {
    if value.is_finite() && ok {
        Ok(())
    } else {
        Err(Error::InvalidParam {
            name,
            value,
            reason,
        })
    }
}

/// Validated scenario with the derived constants `eta` and `lambda` cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    scenario: Scenario,
    eta: f64,
    lambda: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        SystemParams::new(Scenario::default()).expect("reference scenario is valid")
    }
}

impl SystemParams {
    pub fn new(s: Scenario) -> Result<Self> {
        check("f_c", s.f_c, s.f_c > 0.0, "must be > 0")?;
        check("P_t", s.p_t, s.p_t > 0.0, "must be > 0")?;
        check("sigma2", s.sigma2, s.sigma2 > 0.0, "must be > 0")?;
        check(
            "zeta",
            s.zeta,
            s.zeta > 0.0 && s.zeta <= 1.0,
            "must lie in (0, 1]",
        )?;
        check("beta", s.beta, s.beta > 0.0, "must be > 0")?;
        check("q0", s.q0, s.q0 >= 0.0, "must be >= 0")?;
        check("L", s.length, s.length > 0.0, "must be > 0")?;
        check("z_p", s.z_p, s.z_p >= 0.0, "must be >= 0")?;
        check("x_u", s.x_u, true, "must be finite")?;
        check("y_u", s.y_u, true, "must be finite")?;

        let wavelength_ratio = SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * s.f_c);
        let eta = wavelength_ratio * wavelength_ratio;
        let lambda = s.p_t / s.sigma2;
        check(
            "f_c",
            s.f_c,
            eta > 0.0 && eta.is_finite(),
            "path-loss coefficient underflows",
        )?;
        check(
            "sigma2",
            s.sigma2,
            lambda.is_finite(),
            "P_t / sigma2 overflows",
        )?;
        Ok(SystemParams {
            scenario: s,
            eta,
            lambda,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    /// Copy of the underlying scenario, modified by `f` and re-validated.
    pub fn with(&self, f: impl FnOnce(&mut Scenario)) -> Result<Self> {
        let mut s = self.scenario;
        f(&mut s);
        SystemParams::new(s)
    }

    /// Free-space path-loss coefficient `(c / (4 pi f_c))^2`.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// Transmit SNR scale `P_t / sigma2`.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn f_c(&self) -> f64 {
        self.scenario.f_c
    }
    pub fn p_t(&self) -> f64 {
        self.scenario.p_t
    }
    pub fn sigma2(&self) -> f64 {
        self.scenario.sigma2
    }
    pub fn zeta(&self) -> f64 {
        self.scenario.zeta
    }
    pub fn beta(&self) -> f64 {
        self.scenario.beta
    }
    pub fn q0(&self) -> f64 {
        self.scenario.q0
    }
    pub fn length(&self) -> f64 {
        self.scenario.length
    }
    pub fn z_p(&self) -> f64 {
        self.scenario.z_p
    }
    pub fn x_u(&self) -> f64 {
        self.scenario.x_u
    }
    pub fn y_u(&self) -> f64 {
        self.scenario.y_u
    }

    /// Perpendicular part of the squared distance, `y_u^2 + z_p^2`.
    pub fn lateral_offset2(&self) -> f64 {
        self.scenario.y_u * self.scenario.y_u + self.scenario.z_p * self.scenario.z_p
    }

    /// Minimum average channel power any feasible position must reach,
    /// `q0 / (zeta P_t)`.
    pub fn channel_threshold(&self) -> f64 {
        self.scenario.q0 / (self.scenario.zeta * self.scenario.p_t)
    }

    /// Projects `x` onto the waveguide `[0, L]`.
    pub fn clamp_to_waveguide(&self, x: f64) -> f64 {
        x.clamp(0.0, self.scenario.length)
    }
}

/// Channel statistics at one antenna position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelPoint {
    pub x: f64,
    pub d2: f64,
    pub p_los: f64,
    pub f_x: f64,
}

impl ChannelPoint {
    pub fn at(params: &SystemParams, x: f64) -> Result<Self> {
        let d2 = squared_distance(params, x);
        if d2 <= 0.0 {
            return Err(Error::DegenerateGeometry(x));
        }
        let p_los = (-params.beta() * d2).exp();
        Ok(ChannelPoint {
            x,
            d2,
            p_los,
            f_x: params.eta() * p_los / d2,
        })
    }

    /// LoS channel power `eta / d^2`, the gain when the link is unblocked.
    pub fn los_gain(&self, params: &SystemParams) -> f64 {
        params.eta() / self.d2
    }
}

/// `(x - x_u)^2 + y_u^2 + z_p^2`. Defined for any `x`, including points off
/// the waveguide.
pub fn squared_distance(params: &SystemParams, x: f64) -> f64 {
    let dx = x - params.x_u();
    dx * dx + params.lateral_offset2()
}

/// Average channel power `f(x) = eta exp(-beta d^2) / d^2`.
pub fn mean_channel_power(params: &SystemParams, x: f64) -> Result<f64> {
    ChannelPoint::at(params, x).map(|p| p.f_x)
}

fn check_rho(rho: f64) -> Result<()> {
    if (0.0..=1.0).contains(&rho) {
        Ok(())
    } else {
        Err(Error::RhoOutOfRange(rho))
    }
}

/// Average SNR `lambda * rho * f(x)`.
pub fn average_snr(params: &SystemParams, x: f64, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(params.lambda() * rho * mean_channel_power(params, x)?)
}

/// Average harvested power `zeta (1 - rho) P_t f(x)`, watts.
pub fn average_harvested_power(params: &SystemParams, x: f64, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(params.zeta() * (1.0 - rho) * params.p_t() * mean_channel_power(params, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometry(x_u: f64, y_u: f64, z_p: f64) -> SystemParams {
        SystemParams::default()
            .with(|s| {
                s.x_u = x_u;
                s.y_u = y_u;
                s.z_p = z_p;
            })
            .unwrap()
    }

    #[test]
    fn squared_distance_examples() {
        let p = geometry(5.0, 5.0, 10.0);
        assert_eq!(squared_distance(&p, 5.0), 125.0);
        assert_eq!(squared_distance(&p, 0.0), 150.0);
        assert_eq!(squared_distance(&geometry(0.0, 0.0, 0.0), 3.0), 9.0);
    }

    #[test]
    fn dbm_conversions() {
        assert!((dbm_to_watts(40.0) - 10.0).abs() < 1e-12);
        assert!((dbm_to_watts(30.0) - 1.0).abs() < 1e-15);
        assert!((dbm_to_watts(0.0) - 1e-3).abs() < 1e-18);
        assert!((watts_to_dbm(10.0) - 40.0).abs() < 1e-12);
    }

    #[test]
    fn mean_channel_power_reference_value() {
        // eta * exp(-0.125) / 125 evaluated with 40-digit arithmetic.
        let expected = 5.125_176_095_606_95e-9;
        let f = mean_channel_power(&SystemParams::default(), 5.0).unwrap();
        assert!((f - expected).abs() / expected < 1e-13, "{f}");
        let eta_ref = 7.259_481_705_540_115e-7;
        assert!((SystemParams::default().eta() - eta_ref).abs() / eta_ref < 1e-14);
    }

    #[test]
    fn lighter_blockage_raises_channel_power() {
        let p = SystemParams::default();
        let light = p.with(|s| s.beta = 1e-4).unwrap();
        assert!(mean_channel_power(&light, 5.0).unwrap() > mean_channel_power(&p, 5.0).unwrap());
    }

    #[test]
    fn snr_reference_and_edges() {
        let p = SystemParams::default();
        assert_eq!(p.lambda(), 1e12);
        let snr = average_snr(&p, 5.0, 1.0).unwrap();
        assert!((snr - 5_125.176_095_606_95).abs() / snr < 1e-13);
        assert_eq!(average_snr(&p, 17.0, 0.0).unwrap(), 0.0);
        assert_eq!(average_harvested_power(&p, 17.0, 1.0).unwrap(), 0.0);
        let full = average_harvested_power(&p, 3.0, 0.0).unwrap();
        let f = mean_channel_power(&p, 3.0).unwrap();
        assert_eq!(full, p.zeta() * p.p_t() * f);
    }

    #[test]
    fn domain_errors() {
        let p = SystemParams::default();
        assert_eq!(average_snr(&p, 1.0, 1.5), Err(Error::RhoOutOfRange(1.5)));
        assert!(average_harvested_power(&p, 1.0, -0.1).is_err());
        let flat = geometry(2.0, 0.0, 0.0);
        assert_eq!(
            mean_channel_power(&flat, 2.0),
            Err(Error::DegenerateGeometry(2.0))
        );
    }

    #[test]
    fn rejects_invalid_scenarios() {
        let bad = [
            Scenario {
                f_c: 0.0,
                ..Default::default()
            },
            Scenario {
                p_t: -1.0,
                ..Default::default()
            },
            Scenario {
                sigma2: 0.0,
                ..Default::default()
            },
            Scenario {
                zeta: 1.2,
                ..Default::default()
            },
            Scenario {
                zeta: 0.0,
                ..Default::default()
            },
            Scenario {
                beta: 0.0,
                ..Default::default()
            },
            Scenario {
                q0: -1e-9,
                ..Default::default()
            },
            Scenario {
                length: 0.0,
                ..Default::default()
            },
            Scenario {
                z_p: -1.0,
                ..Default::default()
            },
            Scenario {
                x_u: f64::NAN,
                ..Default::default()
            },
        ];
        for s in bad {
            assert!(SystemParams::new(s).is_err(), "{s:?}");
        }
        assert!(SystemParams::new(Scenario {
            q0: 0.0,
            zeta: 1.0,
            ..Default::default()
        })
        .is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn params() -> impl Strategy<Value = SystemParams> {
            (
                1e9..1e11f64,
                -5.0..5.0f64,
                0.1..20.0f64,
                1e-4..1e-1f64,
                0.1..20.0f64,
            )
                .prop_map(|(f_c, p_exp, y_u, beta, z_p)| {
                    SystemParams::new(Scenario {
                        f_c,
                        p_t: 10f64.powf(p_exp),
                        y_u,
                        beta,
                        z_p,
                        ..Default::default()
                    })
                    .unwrap()
                })
        }

        proptest! {
            #[test]
            fn channel_power_decreases_with_distance(p in params(), a in -20.0..80.0f64, b in -20.0..80.0f64) {
                let (fa, fb) = (mean_channel_power(&p, a).unwrap(), mean_channel_power(&p, b).unwrap());
                let (da, db) = (squared_distance(&p, a), squared_distance(&p, b));
                if da < db { prop_assert!(fa >= fb); }
                if db < da { prop_assert!(fb >= fa); }
            }

            #[test]
            fn channel_power_symmetric_about_user(p in params(), delta in 0.0..40.0f64) {
                let left = mean_channel_power(&p, p.x_u() - delta).unwrap();
                let right = mean_channel_power(&p, p.x_u() + delta).unwrap();
                prop_assert!((left - right).abs() <= 1e-12 * left);
            }

            #[test]
            fn split_conserves_received_power(p in params(), x in 0.0..50.0f64, rho in 0.0..=1.0f64) {
                let f = mean_channel_power(&p, x).unwrap();
                let id = average_snr(&p, x, rho).unwrap() * p.sigma2();
                let eh = average_harvested_power(&p, x, rho).unwrap() / p.zeta();
                let total = p.p_t() * f;
                prop_assert!((id + eh - total).abs() <= 1e-13 * total);
            }

            #[test]
            fn snr_linear_in_rho(p in params(), x in 0.0..50.0f64, rho in 0.0..=1.0f64) {
                let one = average_snr(&p, x, 1.0).unwrap();
                let part = average_snr(&p, x, rho).unwrap();
                prop_assert!((part - rho * one).abs() <= 1e-14 * one);
            }

            #[test]
            fn los_probability_in_unit_interval(p in params(), x in -30.0..40.0f64) {
                let c = ChannelPoint::at(&p, x).unwrap();
                prop_assert!(c.p_los > 0.0 && c.p_los <= 1.0);
                prop_assert!(c.d2 >= p.lateral_offset2());
            }
        }
    }
}
