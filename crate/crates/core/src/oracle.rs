//! Brute-force grid search used to cross-check the closed form.
//!
//! Positions are sampled uniformly over `[0, L]`. The ratio is either taken
//! from the per-position optimum (`RhoMode::Analytic`) or also gridded over
//! `[0, 1]` (`RhoMode::Grid`), which trusts nothing but the model formulas.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{mean_channel_power, SystemParams};
use crate::optimizer::{rho_star_given_x, Solution, FEASIBILITY_SLACK};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoMode {
    Analytic,
    Grid(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub x_points: usize,
    pub rho: RhoMode,
}

impl Default for GridSpec {
    /// 10 001 positions (5 mm steps on a 50 m guide) with analytic ratios.
    fn default() -> Self {
        GridSpec {
            x_points: 10_001,
            rho: RhoMode::Analytic,
        }
    }
}

impl GridSpec {
    pub fn analytic(x_points: usize) -> Self {
        GridSpec {
            x_points,
            rho: RhoMode::Analytic,
        }
    }

    pub fn joint(x_points: usize, rho_points: usize) -> Self {
        GridSpec {
            x_points,
            rho: RhoMode::Grid(rho_points),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_points < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 x points, got {}",
                self.x_points
            )));
        }
        if let RhoMode::Grid(n) = self.rho {
            if n < 2 {
                return Err(Error::InvalidGrid(format!(
                    "need at least 2 rho points, got {n}"
                )));
            }
        }
        Ok(())
    }

    /// Position spacing on a guide of length `length`.
    pub fn x_step(&self, length: f64) -> f64 {
        length / (self.x_points - 1) as f64
    }

    pub fn x_at(&self, i: usize, length: f64) -> f64 {
        uniform(i, self.x_points, 0.0, length)
    }
}

pub(crate) fn uniform(i: usize, n: usize, lo: f64, hi: f64) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    snr: f64,
    offset: f64,
    x: f64,
    rho: f64,
}

/// Higher SNR wins, then proximity to the user, then the smaller position.
fn better(a: &Candidate, b: &Candidate) -> Ordering {
    a.snr
        .total_cmp(&b.snr)
        .then(b.offset.total_cmp(&a.offset))
        .then(b.x.total_cmp(&a.x))
}

fn best_at(params: &SystemParams, spec: &GridSpec, x: f64) -> Result<Option<Candidate>> {
    let offset = (x - params.x_u()).abs();
    match spec.rho {
        RhoMode::Analytic => {
            let Some(rho) = rho_star_given_x(params, x)? else {
                return Ok(None);
            };
            let f = mean_channel_power(params, x)?;
            Ok(Some(Candidate {
                snr: params.lambda() * rho * f,
                offset,
                x,
                rho,
            }))
        }
        RhoMode::Grid(n) => {
            let f = mean_channel_power(params, x)?;
            let floor = params.q0() * (1.0 - FEASIBILITY_SLACK);
            let mut best: Option<Candidate> = None;
            for j in 0..n {
                let rho = uniform(j, n, 0.0, 1.0);
                let eh = params.zeta() * (1.0 - rho) * params.p_t() * f;
                if eh < floor {
                    continue;
                }
                let c = Candidate {
                    snr: params.lambda() * rho * f,
                    offset,
                    x,
                    rho,
                };
                if best.is_none_or(|b| better(&c, &b) == Ordering::Greater) {
                    best = Some(c);
                }
            }
            Ok(best)
        }
    }
}

/// Best feasible grid point; `Infeasible` when no grid point complies.
pub fn grid_solve(params: &SystemParams, spec: &GridSpec) -> Result<Solution> {
    spec.validate()?;
    let length = params.length();
    let candidates = (0..spec.x_points)
        .into_par_iter()
        .map(|i| best_at(params, spec, spec.x_at(i, length)))
        .collect::<Result<Vec<_>>>()?;

    let best = candidates.into_iter().flatten().max_by(better);
    match best {
        None => Ok(Solution::infeasible()),
        Some(c) => Solution::constrained(params, c.x, c.rho),
    }
}
