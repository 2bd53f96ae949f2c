//! One- and two-variable parameter sweeps over the schemes.
//!
//! Sweeping `x` or `rho` pins the position or ratio of every scheme; the
//! other variables change the scenario and let each scheme choose freely.
//! Rows come out in sweep order (first axis outermost, then the second axis,
//! then schemes in the requested order) no matter how points are scheduled.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::benchmarks::{evaluate_scheme_with, Overrides, SchemeId};
use crate::error::{Error, Result};
use crate::experiments::config::RunConfig;
use crate::experiments::format::{fmt_num, metric_cells, METRIC_COLUMNS};
use crate::model::dbm_to_watts;
use crate::optimizer::Solution;
use crate::oracle::uniform;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepVar {
    X,
    PtDbm,
    Beta,
    Q0,
    Xu,
    Zp,
    Rho,
}

impl SweepVar {
    pub const ALL: [SweepVar; 7] = [
        SweepVar::X,
        SweepVar::PtDbm,
        SweepVar::Beta,
        SweepVar::Q0,
        SweepVar::Xu,
        SweepVar::Zp,
        SweepVar::Rho,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SweepVar::X => "x",
            SweepVar::PtDbm => "P_t_dbm",
            SweepVar::Beta => "beta",
            SweepVar::Q0 => "q0",
            SweepVar::Xu => "x_u",
            SweepVar::Zp => "z_p",
            SweepVar::Rho => "rho",
        }
    }
}

impl fmt::Display for SweepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SweepVar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepVar::ALL
            .into_iter()
            .find(|v| v.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::InvalidSweep(format!(
                    "unknown variable `{s}` (expected x|P_t_dbm|beta|q0|x_u|z_p|rho)"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub var: SweepVar,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
}

impl Axis {
    pub fn linear(var: SweepVar, min: f64, max: f64, points: usize) -> Self {
        Axis {
            var,
            min,
            max,
            points,
            log: false,
        }
    }

    pub fn log(var: SweepVar, min: f64, max: f64, points: usize) -> Self {
        Axis {
            log: true,
            ..Axis::linear(var, min, max, points)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::InvalidSweep(format!("{}: {m}", self.var)));
        if !(self.min.is_finite() && self.max.is_finite()) {
            return fail("range endpoints must be finite".into());
        }
        if self.points == 0 {
            return fail("need at least one point".into());
        }
        if self.min > self.max {
            return fail(format!("min {} exceeds max {}", self.min, self.max));
        }
        if self.points == 1 && self.min != self.max {
            return fail("a single point needs min == max".into());
        }
        if self.log && self.min <= 0.0 {
            return fail("log spacing needs positive endpoints".into());
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.min];
        }
        (0..self.points)
            .map(|i| {
                if self.log {
                    let (lo, hi) = (self.min.log10(), self.max.log10());
                    if i == 0 {
                        self.min
                    } else if i + 1 == self.points {
                        self.max
                    } else {
                        10f64.powf(uniform(i, self.points, lo, hi))
                    }
                } else {
                    uniform(i, self.points, self.min, self.max)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axes: Vec<Axis>,
    pub schemes: Vec<SchemeId>,
}

impl SweepSpec {
    pub fn one(axis: Axis, schemes: &[SchemeId]) -> Self {
        SweepSpec {
            axes: vec![axis],
            schemes: schemes.to_vec(),
        }
    }

    pub fn two(first: Axis, second: Axis, schemes: &[SchemeId]) -> Self {
        SweepSpec {
            axes: vec![first, second],
            schemes: schemes.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.axes.as_slice() {
            [a] => a.validate()?,
            [a, b] => {
                a.validate()?;
                b.validate()?;
                if a.var == b.var {
                    return Err(Error::InvalidSweep(format!(
                        "variable {} swept twice",
                        a.var
                    )));
                }
            }
            _ => {
                return Err(Error::InvalidSweep(
                    "need one or two sweep variables".into(),
                ))
            }
        }
        if self.schemes.is_empty() {
            return Err(Error::InvalidSweep("no schemes selected".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub values: Vec<f64>,
    pub scheme: SchemeId,
    pub solution: Solution,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub vars: Vec<SweepVar>,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn header(&self) -> String {
        let swept = if self.vars.len() == 2 {
            "swept_var,swept_var2"
        } else {
            "swept_var"
        };
        format!("{swept},scheme,{METRIC_COLUMNS}")
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.header())?;
        for row in &self.rows {
            for v in &row.values {
                write!(w, "{},", fmt_num(*v))?;
            }
            writeln!(w, "{},{}", row.scheme, metric_cells(&row.solution))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    /// Rows of one scheme, in sweep order.
    pub fn scheme_rows(&self, scheme: SchemeId) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.scheme == scheme)
    }
}

/// Applies one swept value to the scenario or the overrides.
fn apply(cfg: &mut RunConfig, overrides: &mut Overrides, var: SweepVar, v: f64) {
    let s = &mut cfg.scenario;
    match var {
        SweepVar::X => overrides.x = Some(v),
        SweepVar::Rho => overrides.rho = Some(v),
        SweepVar::PtDbm => s.p_t = dbm_to_watts(v),
        SweepVar::Beta => s.beta = v,
        SweepVar::Q0 => s.q0 = v,
        SweepVar::Xu => s.x_u = v,
        SweepVar::Zp => s.z_p = v,
    }
}

pub fn run_sweep(config: &RunConfig, spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let points: Vec<Vec<f64>> = match spec.axes.as_slice() {
        [a] => a.values().into_iter().map(|v| vec![v]).collect(),
        [a, b] => {
            let inner = b.values();
            a.values()
                .into_iter()
                .flat_map(|u| inner.iter().map(move |&v| vec![u, v]))
                .collect()
        }
        _ => unreachable!("validated above"),
    };

    let per_point = points
        .into_par_iter()
        .map(|values| {
            let mut cfg = *config;
            let mut overrides = Overrides::default();
            for (axis, &v) in spec.axes.iter().zip(&values) {
                apply(&mut cfg, &mut overrides, axis.var, v);
            }
            let params = cfg.params()?;
            spec.schemes
                .iter()
                .map(|&scheme| {
                    Ok(SweepRow {
                        values: values.clone(),
                        scheme,
                        solution: evaluate_scheme_with(&params, scheme, overrides)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepResult {
        vars: spec.axes.iter().map(|a| a.var).collect(),
        rows: per_point.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimizer::Status;

    #[test]
    fn axis_values() {
        let lin = Axis::linear(SweepVar::X, 0.0, 50.0, 11).values();
        assert_eq!(lin.len(), 11);
        assert_eq!(lin[0], 0.0);
        assert_eq!(lin[10], 50.0);
        assert_eq!(lin[1], 5.0);
        let log = Axis::log(SweepVar::Q0, 1e-11, 1e-7, 5).values();
        assert_eq!(log[0], 1e-11);
        assert_eq!(log[4], 1e-7);
        assert!((log[2] - 1e-9).abs() < 1e-22);
        assert_eq!(
            Axis::linear(SweepVar::Beta, 0.1, 0.1, 1).values(),
            vec![0.1]
        );
    }

    #[test]
    fn rejects_bad_specs() {
        let ok = Axis::linear(SweepVar::X, 0.0, 50.0, 3);
        let s = [SchemeId::Proposed];
        assert!(SweepSpec::one(Axis::log(SweepVar::Q0, 0.0, 1.0, 3), &s)
            .validate()
            .is_err());
        assert!(SweepSpec::one(Axis::linear(SweepVar::X, 2.0, 1.0, 3), &s)
            .validate()
            .is_err());
        assert!(SweepSpec::one(Axis::linear(SweepVar::X, 0.0, 1.0, 0), &s)
            .validate()
            .is_err());
        assert!(SweepSpec::two(ok, ok, &s).validate().is_err());
        assert!(SweepSpec::one(ok, &[]).validate().is_err());
        assert!("P_T_DBM".parse::<SweepVar>().is_ok());
        assert!("gain".parse::<SweepVar>().is_err());
    }

    #[test]
    fn invalid_swept_parameter_is_an_error() {
        let spec = SweepSpec::one(
            Axis::linear(SweepVar::Beta, -1.0, 1.0, 3),
            &[SchemeId::Proposed],
        );
        assert!(run_sweep(&RunConfig::default(), &spec).is_err());
    }

    #[test]
    fn rows_in_sweep_order() {
        let spec = SweepSpec::two(
            Axis::linear(SweepVar::Xu, 0.0, 10.0, 3),
            Axis::linear(SweepVar::Zp, 5.0, 6.0, 2),
            &[SchemeId::Bm0, SchemeId::Proposed],
        );
        let res = run_sweep(&RunConfig::default(), &spec).unwrap();
        assert_eq!(res.rows.len(), 12);
        let keys: Vec<_> = res
            .rows
            .iter()
            .map(|r| (r.values.clone(), r.scheme))
            .collect();
        assert_eq!(keys[0], (vec![0.0, 5.0], SchemeId::Bm0));
        assert_eq!(keys[1], (vec![0.0, 5.0], SchemeId::Proposed));
        assert_eq!(keys[2], (vec![0.0, 6.0], SchemeId::Bm0));
        assert_eq!(keys[11], (vec![10.0, 6.0], SchemeId::Proposed));
    }

    #[test]
    fn csv_layout() {
        let spec = SweepSpec::one(
            Axis::linear(SweepVar::X, 0.0, 50.0, 3),
            &[SchemeId::Proposed],
        );
        let csv = run_sweep(&RunConfig::default(), &spec).unwrap().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "swept_var,scheme,status,x,rho,avg_snr,avg_snr_db,avg_eh"
        );
        assert!(lines[1].starts_with("0,proposed,feasible,0,"));
        assert_eq!(lines[2], "25,proposed,infeasible,,,,,");
        assert_eq!(lines.len(), 4);

        let two = SweepSpec::two(
            Axis::linear(SweepVar::X, 0.0, 50.0, 2),
            Axis::linear(SweepVar::Rho, 0.0, 1.0, 2),
            &[SchemeId::Proposed],
        );
        let res = run_sweep(&RunConfig::default(), &two).unwrap();
        assert!(res
            .to_csv()
            .starts_with("swept_var,swept_var2,scheme,status,"));
        assert_eq!(res.rows[1].solution.status, Status::Infeasible);
    }
}
