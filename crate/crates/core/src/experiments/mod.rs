//! Experiment drivers behind the command-line tool: configuration, sweeps,
//! single-point reports and Monte-Carlo checks.

pub mod config;
pub mod format;
pub mod reports;
pub mod sweep;

pub use config::{ParamOverrides, RunConfig};
pub use reports::{bench_csv, montecarlo_report, solve_report, MonteCarloReport, SolveReport};
pub use sweep::{run_sweep, Axis, SweepResult, SweepRow, SweepSpec, SweepVar};
