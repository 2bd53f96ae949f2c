use std::fmt::Write as _;

use crate::benchmarks::evaluate_all;
use crate::error::Result;
use crate::experiments::config::RunConfig;
use crate::experiments::format::{fmt_num, fmt_opt, metric_cells, METRIC_COLUMNS};
use crate::model::{to_db, SystemParams};
use crate::montecarlo::{simulate, z_score, TrialStats};
use crate::optimizer::{feasibility_region, solve, FeasibilityRegion, Solution};

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub params: SystemParams,
    pub region: FeasibilityRegion,
    pub solution: Solution,
}

pub fn solve_report(config: &RunConfig) -> Result<SolveReport> {
    let params = config.params()?;
    Ok(SolveReport {
        params,
        region: feasibility_region(&params)?,
        solution: solve(&params)?,
    })
}

impl SolveReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.solution;
        let _ = writeln!(out, "status          {}", s.status);
        if let Some(p) = s.point {
            let _ = writeln!(out, "x*              {} m", fmt_num(p.x));
            let _ = writeln!(out, "rho*            {}", fmt_num(p.rho));
            let _ = writeln!(
                out,
                "avg SNR         {} ({} dB)",
                fmt_num(p.avg_snr),
                fmt_num(to_db(p.avg_snr))
            );
            let _ = writeln!(out, "avg EH          {} W", fmt_num(p.avg_eh));
        }
        let _ = writeln!(out, "t_th            {} m^2", fmt_num(self.region.t_th));
        let _ = writeln!(out, "R               {} m", fmt_num(self.region.radius()));
        match self.region.interval {
            Some((lo, hi)) => {
                let _ = writeln!(out, "feasible x      [{}, {}] m", fmt_num(lo), fmt_num(hi));
            }
            None => {
                let _ = writeln!(out, "feasible x      (empty)");
            }
        }
        out
    }

    /// `key=value` lines, one per field; absent values are left empty.
    pub fn render_kv(&self) -> String {
        let s = &self.solution;
        let (lo, hi) = match self.region.interval {
            Some((lo, hi)) => (Some(lo), Some(hi)),
            None => (None, None),
        };
        let fields = [
            ("x_star", s.x()),
            ("rho_star", s.rho()),
            ("avg_snr", s.avg_snr()),
            ("avg_snr_db", s.avg_snr().map(to_db)),
            ("avg_eh", s.avg_eh()),
            ("t_th", Some(self.region.t_th)),
            ("r_squared", Some(self.region.r_squared)),
            ("radius", Some(self.region.radius())),
            ("interval_lo", lo),
            ("interval_hi", hi),
        ];
        let mut out = format!("status={}\n", s.status);
        for (k, v) in fields {
            let _ = writeln!(out, "{k}={}", fmt_opt(v));
        }
        out
    }
}

/// Every scheme at the configured operating point.
pub fn bench_csv(config: &RunConfig) -> Result<String> {
    let params = config.params()?;
    let mut out = format!("scheme,{METRIC_COLUMNS}\n");
    for (id, sol) in evaluate_all(&params)? {
        let _ = writeln!(out, "{id},{}", metric_cells(&sol));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub solution: Solution,
    pub analytic_snr: f64,
    pub analytic_eh: f64,
    pub stats: TrialStats,
}

/// Solves, then simulates at the optimum. `None` when the problem is
/// infeasible and there is nothing to simulate.
pub fn montecarlo_report(config: &RunConfig, n_trials: u64) -> Result<Option<MonteCarloReport>> {
    let params = config.params()?;
    let solution = solve(&params)?;
    let Some(point) = solution.point else {
        return Ok(None);
    };
    let stats = simulate(&params, point.x, point.rho, n_trials, config.seed)?;
    Ok(Some(MonteCarloReport {
        solution,
        // use the raw model values, not the zeroed degenerate SNR
        analytic_snr: params.lambda()
            * point.rho
            * crate::model::mean_channel_power(&params, point.x)?,
        analytic_eh: point.avg_eh,
        stats,
    }))
}

impl MonteCarloReport {
    pub fn z_snr(&self) -> Option<f64> {
        z_score(
            self.analytic_snr,
            self.stats.mean_snr,
            self.stats.stderr_snr,
        )
    }

    pub fn z_eh(&self) -> Option<f64> {
        z_score(self.analytic_eh, self.stats.mean_eh, self.stats.stderr_eh)
    }

    pub fn to_csv(&self) -> String {
        let st = &self.stats;
        let x = fmt_opt(self.solution.x());
        let rho = fmt_opt(self.solution.rho());
        let mut out =
            String::from("metric,analytic,empirical,stderr,z_score,n_trials,seed,x,rho\n");
        for (name, analytic, mean, se, z) in [
            (
                "snr",
                self.analytic_snr,
                st.mean_snr,
                st.stderr_snr,
                self.z_snr(),
            ),
            (
                "eh",
                self.analytic_eh,
                st.mean_eh,
                st.stderr_eh,
                self.z_eh(),
            ),
        ] {
            let _ = writeln!(
                out,
                "{name},{},{},{},{},{},{},{x},{rho}",
                fmt_num(analytic),
                fmt_num(mean),
                fmt_opt(se),
                fmt_opt(z),
                st.n_trials,
                st.seed,
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let st = &self.stats;
        format!(
            "{} trials (seed {}), LoS in {} ({:.4}%)\n\
             SNR  analytic {}  empirical {}  z {}\n\
             EH   analytic {} W  empirical {} W  z {}\n",
            st.n_trials,
            st.seed,
            st.los_count,
            100.0 * st.los_count as f64 / st.n_trials as f64,
            fmt_num(self.analytic_snr),
            fmt_num(st.mean_snr),
            self.z_snr()
                .map_or("n/a".to_string(), |z| format!("{z:.3}")),
            fmt_num(self.analytic_eh),
            fmt_num(st.mean_eh),
            self.z_eh().map_or("n/a".to_string(), |z| format!("{z:.3}")),
        )
    }
}
