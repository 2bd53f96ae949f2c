//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::benchmarks::SchemeId;
use crate::experiments::{
    bench_csv, montecarlo_report, run_sweep, solve_report, Axis, ParamOverrides, RunConfig,
    SweepSpec, SweepVar,
};
use crate::optimizer::Status;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pinching-swipt",
    about = "Pinching-antenna SWIPT optimizer and experiment runner"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// key = value configuration file
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file (stdout when absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write the effective configuration to this file
    #[arg(long, global = true)]
    pub dump_config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Transmit power, dBm
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub pt_dbm: Option<f64>,
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    /// Harvesting requirement, W
    #[arg(long, global = true)]
    pub q0: Option<f64>,
    #[arg(long, global = true)]
    pub fc_ghz: Option<f64>,
    /// Waveguide length, m
    #[arg(long = "L", global = true)]
    pub length: Option<f64>,
    #[arg(long, global = true)]
    pub zp: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub xu: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub yu: Option<f64>,
    /// Noise power, W
    #[arg(long, global = true)]
    pub sigma2: Option<f64>,
    #[arg(long, global = true)]
    pub zeta: Option<f64>,
}

impl CommonArgs {
    fn overrides(&self) -> ParamOverrides {
        ParamOverrides {
            pt_dbm: self.pt_dbm,
            beta: self.beta,
            q0: self.q0,
            fc_ghz: self.fc_ghz,
            length: self.length,
            z_p: self.zp,
            x_u: self.xu,
            y_u: self.yu,
            sigma2: self.sigma2,
            zeta: self.zeta,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form optimum at one operating point
    Solve,
    /// One-variable sweep, CSV output
    Sweep(SweepArgs),
    /// Two-variable sweep, CSV output
    Grid2d(Grid2dArgs),
    /// Simulate blockage at the optimum and compare with the averages
    Montecarlo {
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
    },
    /// All schemes at one operating point, CSV output
    Bench,
}

#[derive(Debug, Args)]
pub struct AxisArgs {
    /// x | P_t_dbm | beta | q0 | x_u | z_p | rho
    #[arg(long)]
    pub var: String,
    #[arg(long, allow_hyphen_values = true)]
    pub min: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub max: f64,
    #[arg(long, default_value_t = 51)]
    pub points: usize,
    /// Logarithmic spacing
    #[arg(long)]
    pub log: bool,
}

impl AxisArgs {
    fn axis(&self) -> crate::Result<Axis> {
        Ok(Axis {
            var: self.var.parse::<SweepVar>()?,
            min: self.min,
            max: self.max,
            points: self.points,
            log: self.log,
        })
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub axis: AxisArgs,
    /// Comma-separated scheme list
    #[arg(long, default_value = "proposed,bm0,bm1,bm2,bm3")]
    pub schemes: String,
}

#[derive(Debug, Args)]
pub struct Grid2dArgs {
    #[command(flatten)]
    pub axis: AxisArgs,
    #[arg(long)]
    pub var2: String,
    #[arg(long, allow_hyphen_values = true)]
    pub min2: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub max2: f64,
    #[arg(long, default_value_t = 51)]
    pub points2: usize,
    #[arg(long)]
    pub log2: bool,
    #[arg(long, default_value = "proposed")]
    pub schemes: String,
}

impl Grid2dArgs {
    fn second(&self) -> crate::Result<Axis> {
        AxisArgs {
            var: self.var2.clone(),
            min: self.min2,
            max: self.max2,
            points: self.points2,
            log: self.log2,
        }
        .axis()
    }
}

fn emit(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let mut config = match &cli.common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    config.apply(&cli.common.overrides());
    config.params()?;
    if let Some(path) = &cli.common.dump_config {
        std::fs::write(path, config.dump())?;
    }
    let out = &cli.common.out;

    match &cli.command {
        Command::Solve => {
            let report = solve_report(&config)?;
            stdout.write_all(report.render_text().as_bytes())?;
            if let Some(p) = out {
                std::fs::write(p, report.render_kv())?;
            }
            Ok(match report.solution.status {
                Status::Infeasible => EXIT_INFEASIBLE,
                _ => EXIT_OK,
            })
        }
        Command::Sweep(args) => {
            let spec = SweepSpec::one(args.axis.axis()?, &SchemeId::parse_list(&args.schemes)?);
            emit(out, &run_sweep(&config, &spec)?.to_csv(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Grid2d(args) => {
            let spec = SweepSpec::two(
                args.axis.axis()?,
                args.second()?,
                &SchemeId::parse_list(&args.schemes)?,
            );
            emit(out, &run_sweep(&config, &spec)?.to_csv(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Montecarlo { trials } => match montecarlo_report(&config, *trials)? {
            None => {
                writeln!(stderr, "infeasible: nothing to simulate")?;
                Ok(EXIT_INFEASIBLE)
            }
            Some(report) => {
                emit(out, &report.to_csv(), stdout)?;
                stderr.write_all(report.summary().as_bytes())?;
                Ok(EXIT_OK)
            }
        },
        Command::Bench => {
            emit(out, &bench_csv(&config)?, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}
