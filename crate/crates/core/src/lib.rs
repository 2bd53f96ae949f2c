//! Joint placement of a pinching antenna and choice of power-splitting ratio
//! for SWIPT over a link with probabilistic line-of-sight blockage.
//!
//! A single antenna slides along a dielectric waveguide of length `L` and
//! serves one user that splits the received power between information
//! decoding (fraction `rho`) and energy harvesting (fraction `1 - rho`). The
//! library maximizes the average SNR subject to an average harvested-power
//! floor `q0`:
//!
//! * [`model`]: geometry, channel and average metrics.
//! * [`lambert`]: the principal Lambert W branch used by the feasibility
//!   threshold.
//! * [`optimizer`]: the closed-form optimum and the feasibility window.
//! * [`oracle`]: brute-force grid search for cross-checking.
//! * [`montecarlo`]: seeded simulation of the blockage process.
//! * [`benchmarks`]: the fixed-position / fixed-ratio baselines.
//! * [`experiments`] and [`cli`]: sweeps, reports and CSV output.
//!
//! ```
//! use pinching_swipt::{solve, Status, SystemParams};
//!
//! let params = SystemParams::default();
//! let sol = solve(&params).unwrap();
//! assert_eq!(sol.status, Status::Feasible);
//! assert_eq!(sol.x(), Some(5.0));
//! ```

pub mod benchmarks;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod lambert;
pub mod model;
pub mod montecarlo;
pub mod optimizer;
pub mod oracle;

pub use benchmarks::{evaluate_scheme, evaluate_scheme_with, Overrides, SchemeId};
pub use error::{Error, Result};
pub use lambert::lambert_w0;
pub use model::{
    average_harvested_power, average_snr, dbm_to_watts, mean_channel_power, squared_distance,
    ChannelPoint, Scenario, SystemParams,
};
pub use montecarlo::{simulate, TrialStats};
pub use optimizer::{
    feasibility_region, rho_star_given_x, snr_envelope, solve, FeasibilityRegion, OperatingPoint,
    Solution, Status,
};
pub use oracle::{grid_solve, GridSpec, RhoMode};
