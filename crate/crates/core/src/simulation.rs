//! Seeded Monte Carlo estimator of the expected utilities.
//!
//! Each round draws the corporation's action first (influence with
//! probability `p`), then the regulator's (favor with `P(F|I)` or `P(F|NI)`),
//! and scores the resulting table cell. A run consumes exactly two draws per
//! round from a single generator stream, so a `(config, seed)` pair
//! reproduces bit-identical results on every platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ModelError, Result};
use crate::game::{
    payoff, ActionProfile, CorporationAction, GameParams, PayoffPair, RegulatorAction,
};
use crate::influence::{
    expected_utility_corporation, expected_utility_regulator, ConditionalStrategy,
    CorporationStrategy,
};

/// Generator and variate mapping used by [`run_simulation`].
///
/// ChaCha8 keyed through `SeedableRng::seed_from_u64`; each uniform is the top
/// 53 bits of `next_u64` scaled to `[0, 1)`, and an event of probability `q`
/// occurs when the uniform is `< q`.
pub const RNG_ALGORITHM: &str = "chacha8(rand_chacha-0.3,seed_from_u64)/u53";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub params: GameParams,
    pub cond: ConditionalStrategy,
    pub corp: CorporationStrategy,
    rounds: u64,
    pub seed: u64,
}

impl SimulationConfig {
    pub fn new(
        params: GameParams,
        cond: ConditionalStrategy,
        corp: CorporationStrategy,
        rounds: u64,
        seed: u64,
    ) -> Result<Self> {
        if rounds == 0 {
            return Err(ModelError::ZeroRounds);
        }
        Ok(Self {
            params,
            cond,
            corp,
            rounds,
            seed,
        })
    }

    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    /// Closed-form `(U_R, U_C)` the run estimates.
    pub fn analytic_utilities(&self) -> (f64, f64) {
        (
            expected_utility_regulator(&self.params, &self.cond, &self.corp),
            expected_utility_corporation(&self.params, &self.cond, &self.corp),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    /// Rounds landing in each profile, indexed by [`ActionProfile::index`].
    pub counts: [u64; 4],
    pub empirical_u_regulator: f64,
    pub empirical_u_corporation: f64,
    pub std_error_regulator: f64,
    pub std_error_corporation: f64,
}

impl SimulationResult {
    pub fn rounds(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn count(&self, profile: ActionProfile) -> u64 {
        self.counts[profile.index()]
    }
}

#[inline]
fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn run_simulation(config: &SimulationConfig) -> SimulationResult {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let p = config.corp.p_influence();
    let favor_i = config.cond.favor_given_influence();
    let favor_ni = config.cond.favor_given_no_influence();

    let mut counts = [0u64; 4];
    for _ in 0..config.rounds {
        let influence = uniform(&mut rng) < p;
        let favor_p = if influence { favor_i } else { favor_ni };
        let favor = uniform(&mut rng) < favor_p;
        counts[profile_of(influence, favor).index()] += 1;
    }

    summarize(&config.params, counts)
}

// Payoff samples take only four values, so means and variances follow from
// the profile counts.
fn summarize(params: &GameParams, counts: [u64; 4]) -> SimulationResult {
    let n = counts.iter().sum::<u64>() as f64;
    let cells = ActionProfile::ALL.map(|profile| payoff(params, profile));
    let freq = counts.map(|c| c as f64 / n);

    let mean = |pick: fn(&PayoffPair) -> f64| -> f64 {
        freq.iter().zip(&cells).map(|(w, c)| w * pick(c)).sum()
    };
    let u_r = mean(|c| c.regulator);
    let u_c = mean(|c| c.corporation);

    let std_error = |pick: fn(&PayoffPair) -> f64, m: f64| -> f64 {
        if n < 2.0 {
            return 0.0;
        }
        let biased: f64 = freq
            .iter()
            .zip(&cells)
            .map(|(w, c)| w * (pick(c) - m).powi(2))
            .sum();
        (biased * n / (n - 1.0) / n).sqrt()
    };

    SimulationResult {
        counts,
        empirical_u_regulator: u_r,
        empirical_u_corporation: u_c,
        std_error_regulator: std_error(|c| c.regulator, u_r),
        std_error_corporation: std_error(|c| c.corporation, u_c),
    }
}

fn profile_of(influence: bool, favor: bool) -> ActionProfile {
    ActionProfile::new(
        if favor {
            RegulatorAction::Favor
        } else {
            RegulatorAction::NotFavor
        },
        if influence {
            CorporationAction::Influence
        } else {
            CorporationAction::NoInfluence
        },
    )
}
