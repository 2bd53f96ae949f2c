//! Monte-Carlo simulation of the Bernoulli LoS blockage process.
//!
//! Each trial draws `gamma ~ Bernoulli(exp(-beta d^2))`; a blocked link
//! contributes nothing. Instantaneous SNR is `rho P_t gamma |h_los|^2 /
//! sigma2` and harvested power is `zeta (1 - rho) P_t gamma |h_los|^2`.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`). Trials are cut
//! into fixed blocks of [`BLOCK_TRIALS`]; block `k` runs on stream `k` of the
//! generator seeded with `seed`, so results do not depend on the number of
//! worker threads. Block statistics are merged in block order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{ChannelPoint, SystemParams};

pub const BLOCK_TRIALS: u64 = 1 << 16;

/// Generator for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// One LoS indicator draw at position `x`: `1` with probability
/// `exp(-beta d^2(x))`.
pub fn sample_gamma<R: Rng + ?Sized>(params: &SystemParams, x: f64, rng: &mut R) -> Result<u8> {
    let p_los = ChannelPoint::at(params, x)?.p_los;
    Ok(draw(p_los, rng))
}

fn draw<R: Rng + ?Sized>(p_los: f64, rng: &mut R) -> u8 {
    u8::from(rng.random::<f64>() < p_los)
}

/// Running mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, v: f64) {
        self.n += 1;
        let delta = v - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (v - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let w = other.n as f64 / n as f64;
        Moments {
            n,
            mean: self.mean + delta * w,
            m2: self.m2 + other.m2 + delta * delta * self.n as f64 * w,
        }
    }

    fn stderr(&self) -> Option<f64> {
        (self.n >= 2).then(|| (self.m2 / (self.n - 1) as f64 / self.n as f64).sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialStats {
    pub n_trials: u64,
    pub mean_snr: f64,
    /// Watts.
    pub mean_eh: f64,
    /// Sample standard deviation over `sqrt(n)`; undefined for one trial.
    pub stderr_snr: Option<f64>,
    pub stderr_eh: Option<f64>,
    /// Trials with an unblocked link.
    pub los_count: u64,
    pub seed: u64,
}

/// Standardized deviation of an empirical mean from its analytic value.
/// Zero when both agree exactly, even with a zero standard error.
pub fn z_score(analytic: f64, empirical: f64, stderr: Option<f64>) -> Option<f64> {
    let se = stderr?;
    let diff = empirical - analytic;
    if diff == 0.0 {
        Some(0.0)
    } else if se == 0.0 {
        Some(diff.signum() * f64::INFINITY)
    } else {
        Some(diff / se)
    }
}

/// Runs `n_trials` blockage draws at `(x, rho)`.
pub fn simulate(
    params: &SystemParams,
    x: f64,
    rho: f64,
    n_trials: u64,
    seed: u64,
) -> Result<TrialStats> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::RhoOutOfRange(rho));
    }
    if n_trials == 0 {
        return Err(Error::InvalidGrid("n_trials must be at least 1".into()));
    }
    let channel = ChannelPoint::at(params, x)?;
    let received = params.p_t() * channel.los_gain(params);
    let snr_los = rho * received / params.sigma2();
    let eh_los = params.zeta() * (1.0 - rho) * received;

    let blocks = n_trials.div_ceil(BLOCK_TRIALS);
    let partials: Vec<(Moments, Moments, u64)> = (0..blocks)
        .into_par_iter()
        .map(|k| {
            let len = BLOCK_TRIALS.min(n_trials - k * BLOCK_TRIALS);
            let mut rng = block_rng(seed, k);
            let (mut snr, mut eh, mut hits) = (Moments::default(), Moments::default(), 0u64);
            for _ in 0..len {
                let gamma = draw(channel.p_los, &mut rng);
                hits += u64::from(gamma);
                let g = f64::from(gamma);
                snr.push(g * snr_los);
                eh.push(g * eh_los);
            }
            (snr, eh, hits)
        })
        .collect();

    let (snr, eh, los_count) = partials.into_iter().fold(
        (Moments::default(), Moments::default(), 0u64),
        |(s, e, h), (bs, be, bh)| (s.merge(bs), e.merge(be), h + bh),
    );

    Ok(TrialStats {
        n_trials,
        mean_snr: snr.mean,
        mean_eh: eh.mean,
        stderr_snr: snr.stderr(),
        stderr_eh: eh.stderr(),
        los_count,
        seed,
    })
}
