//! Flat `key = value` run configuration.
//!
//! Keys are the scenario field names (`f_c`, `P_t`, `sigma2`, `zeta`, `beta`,
//! `q0`, `L`, `z_p`, `x_u`, `y_u`) plus `seed`. `P_t_dbm` and `f_c_ghz` are
//! accepted as unit-converting aliases. Blank lines and `#` comments are
//! skipped.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::experiments::format::fmt_num;
use crate::model::{dbm_to_watts, Scenario, SystemParams};

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            scenario: Scenario::default(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Optional per-parameter overrides, as given on the command line.
/// Powers are in dBm and the carrier in GHz here; everything else is SI.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ParamOverrides {
    pub pt_dbm: Option<f64>,
    pub beta: Option<f64>,
    pub q0: Option<f64>,
    pub fc_ghz: Option<f64>,
    pub length: Option<f64>,
    pub z_p: Option<f64>,
    pub x_u: Option<f64>,
    pub y_u: Option<f64>,
    pub sigma2: Option<f64>,
    pub zeta: Option<f64>,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn params(&self) -> Result<SystemParams> {
        SystemParams::new(self.scenario)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// Parses config text on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(Error::Config {
                    line,
                    message: format!("expected `key = value`, got `{content}`"),
                });
            };
            cfg.set(key.trim(), value.trim(), line)?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        let bad = |what: &str| Error::Config {
            line,
            message: format!("key `{key}`: cannot parse `{value}` as {what}"),
        };
        if key == "seed" {
            self.seed = value.parse().map_err(|_| bad("an unsigned integer"))?;
            return Ok(());
        }
        let v: f64 = value.parse().map_err(|_| bad("a number"))?;
        let s = &mut self.scenario;
        match key {
            "f_c" => s.f_c = v,
            "f_c_ghz" => s.f_c = v * 1e9,
            "P_t" => s.p_t = v,
            "P_t_dbm" => s.p_t = dbm_to_watts(v),
            "sigma2" => s.sigma2 = v,
            "zeta" => s.zeta = v,
            "beta" => s.beta = v,
            "q0" => s.q0 = v,
            "L" => s.length = v,
            "z_p" => s.z_p = v,
            "x_u" => s.x_u = v,
            "y_u" => s.y_u = v,
            _ => return Err(Error::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Flags win over file values.
    pub fn apply(&mut self, o: &ParamOverrides) {
        let s = &mut self.scenario;
        if let Some(v) = o.pt_dbm {
            s.p_t = dbm_to_watts(v);
        }
        if let Some(v) = o.fc_ghz {
            s.f_c = v * 1e9;
        }
        let plain = [
            (o.beta, &mut s.beta),
            (o.q0, &mut s.q0),
            (o.length, &mut s.length),
            (o.z_p, &mut s.z_p),
            (o.x_u, &mut s.x_u),
            (o.y_u, &mut s.y_u),
            (o.sigma2, &mut s.sigma2),
            (o.zeta, &mut s.zeta),
        ];
        for (value, slot) in plain {
            if let Some(v) = value {
                *slot = v;
            }
        }
        if let Some(seed) = o.seed {
            self.seed = seed;
        }
    }

    /// Canonical text form; `parse(dump())` reproduces `self` exactly.
    pub fn dump(&self) -> String {
        let s = &self.scenario;
        let mut out = String::new();
        for (key, v) in [
            ("f_c", s.f_c),
            ("P_t", s.p_t),
            ("sigma2", s.sigma2),
            ("zeta", s.zeta),
            ("beta", s.beta),
            ("q0", s.q0),
            ("L", s.length),
            ("z_p", s.z_p),
            ("x_u", s.x_u),
            ("y_u", s.y_u),
        ] {
            let _ = writeln!(out, "{key} = {}", fmt_num(v));
        }
        let _ = writeln!(out, "seed = {}", self.seed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        let cfg = RunConfig::parse("# nothing\n\n").unwrap();
        assert_eq!(cfg, RunConfig::default());
        let p = cfg.params().unwrap();
        assert_eq!(p.f_c(), 28e9);
        assert!((p.p_t() - 10.0).abs() < 1e-12);
        assert_eq!(p.sigma2(), 1e-11);
        assert_eq!(p.zeta(), 0.6);
        assert_eq!(p.length(), 50.0);
        assert_eq!(p.z_p(), 10.0);
        assert_eq!((p.x_u(), p.y_u()), (5.0, 5.0));
        assert_eq!(p.beta(), 1e-3);
        assert_eq!(p.q0(), 1e-8);
    }

    #[test]
    fn parses_keys_and_aliases() {
        let cfg = RunConfig::parse("beta = 0.01  # dense\nP_t_dbm=30\nf_c_ghz = 6\nseed = 9\nL=80")
            .unwrap();
        assert_eq!(cfg.scenario.beta, 0.01);
        assert!((cfg.scenario.p_t - 1.0).abs() < 1e-15);
        assert_eq!(cfg.scenario.f_c, 6e9);
        assert_eq!(cfg.scenario.length, 80.0);
        assert_eq!(cfg.seed, 9);
    }

    #[test]
    fn errors_name_the_key() {
        let err = RunConfig::parse("beta = 1e-3\nq0 = lots").unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
        assert!(err.to_string().contains("q0"));
        assert_eq!(
            RunConfig::parse("gain = 3").unwrap_err(),
            Error::UnknownKey("gain".into())
        );
        assert!(RunConfig::parse("just words").is_err());
    }

    #[test]
    fn flags_override_file() {
        let mut cfg = RunConfig::parse("beta = 0.01\nq0 = 1e-9").unwrap();
        cfg.apply(&ParamOverrides {
            beta: Some(1e-4),
            pt_dbm: Some(20.0),
            seed: Some(1),
            ..Default::default()
        });
        assert_eq!(cfg.scenario.beta, 1e-4);
        assert_eq!(cfg.scenario.q0, 1e-9);
        assert!((cfg.scenario.p_t - 0.1).abs() < 1e-15);
        assert_eq!(cfg.seed, 1);
    }

    #[test]
    fn dump_round_trips() {
        let mut cfg = RunConfig::default();
        cfg.apply(&ParamOverrides {
            pt_dbm: Some(33.3),
            q0: Some(3.3e-9),
            x_u: Some(-2.75),
            ..Default::default()
        });
        assert_eq!(RunConfig::parse(&cfg.dump()).unwrap(), cfg);
    }
}
