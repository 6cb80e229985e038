//! Conditional-influence extension of the one-shot game.
//!
//! The regulator's action is conditioned on the corporation's through
//! `P(F|I)` and `P(F|NI)`; their difference is the degree of influence `Δ`.
//! Collusion pays for both players exactly when `ΔC < t < ΔB`.

use crate::error::{check, ModelError, Result};
use crate::game::{CorporationAction, GameParams, Response};

/// Degree of influence, `P(F|I) - P(F|NI)`, in `[-1, 1]`.
///
/// Negative values (an adverse reaction to the attempt) are representable and
/// always infeasible.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Delta(f64);

impl Delta {
    pub fn new(value: f64) -> Result<Self> {
        check(
            "delta",
            value,
            (-1.0..=1.0).contains(&value),
            "-1 <= delta <= 1",
        )
        .map(Self)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn probability(name: &'static str, value: f64) -> Result<f64> {
    check(name, value, (0.0..=1.0).contains(&value), "0 <= p <= 1")
}

/// Regulator's conditional probabilities of favoring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalStrategy {
    favor_given_influence: f64,
    favor_given_no_influence: f64,
}

impl ConditionalStrategy {
    pub fn new(favor_given_influence: f64, favor_given_no_influence: f64) -> Result<Self> {
        Ok(Self {
            favor_given_influence: probability("p_favor_given_influence", favor_given_influence)?,
            favor_given_no_influence: probability(
                "p_favor_given_no_influence",
                favor_given_no_influence,
            )?,
        })
    }

    /// Strategy with `P(F|NI) = baseline` and `P(F|I) = baseline + Δ`.
    pub fn from_delta(delta: Delta, baseline: f64) -> Result<Self> {
        Self::new(baseline + delta.value(), baseline)
    }

    pub fn favor_given_influence(&self) -> f64 {
        self.favor_given_influence
    }

    pub fn favor_given_no_influence(&self) -> f64 {
        self.favor_given_no_influence
    }

    pub fn not_favor_given_influence(&self) -> f64 {
        1.0 - self.favor_given_influence
    }

    pub fn not_favor_given_no_influence(&self) -> f64 {
        1.0 - self.favor_given_no_influence
    }

    /// Probability of favoring given the corporation's action.
    pub fn favor_given(&self, action: CorporationAction) -> f64 {
        match action {
            CorporationAction::Influence => self.favor_given_influence,
            CorporationAction::NoInfluence => self.favor_given_no_influence,
        }
    }

    pub fn delta(&self) -> Delta {
        Delta(self.favor_given_influence - self.favor_given_no_influence)
    }
}

/// Probability `p` that the corporation attempts influence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorporationStrategy {
    p_influence: f64,
}

impl CorporationStrategy {
    pub fn new(p_influence: f64) -> Result<Self> {
        probability("p_influence", p_influence).map(|p_influence| Self { p_influence })
    }

    pub fn p_influence(&self) -> f64 {
        self.p_influence
    }
}

/// A transfer that loses value in transit: the corporation pays `t_c`, the
/// regulator receives `t_r <= t_c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymmetricTransfer {
    cost_to_corporation: f64,
    benefit_to_regulator: f64,
}

impl AsymmetricTransfer {
    pub fn new(cost_to_corporation: f64, benefit_to_regulator: f64) -> Result<Self> {
        check(
            "benefit_to_regulator",
            benefit_to_regulator,
            benefit_to_regulator >= 0.0,
            "t_r >= 0",
        )?;
        check(
            "cost_to_corporation",
            cost_to_corporation,
            cost_to_corporation >= benefit_to_regulator,
            "t_c >= t_r",
        )?;
        Ok(Self {
            cost_to_corporation,
            benefit_to_regulator,
        })
    }

    /// No depreciation: both sides see the same `t`.
    pub fn symmetric(transfer: f64) -> Result<Self> {
        Self::new(transfer, transfer)
    }

    pub fn cost_to_corporation(&self) -> f64 {
        self.cost_to_corporation
    }

    pub fn benefit_to_regulator(&self) -> f64 {
        self.benefit_to_regulator
    }
}

/// `U_R = -C·P(F|I)·p - C·P(F|NI)·(1-p) + t·p`.
pub fn expected_utility_regulator(
    params: &GameParams,
    cond: &ConditionalStrategy,
    corp: &CorporationStrategy,
) -> f64 {
    let (c, t, p) = (params.cost(), params.transfer(), corp.p_influence);
    -c * cond.favor_given_influence * p - c * cond.favor_given_no_influence * (1.0 - p) + t * p
}

/// `U_C = B·P(F|I)·p + B·P(F|NI)·(1-p) - t·p`.
pub fn expected_utility_corporation(
    params: &GameParams,
    cond: &ConditionalStrategy,
    corp: &CorporationStrategy,
) -> f64 {
    let (b, t, p) = (params.benefit(), params.transfer(), corp.p_influence);
    b * cond.favor_given_influence * p + b * cond.favor_given_no_influence * (1.0 - p) - t * p
}

/// The corporation's optimal influence probability.
///
/// `U_C` is affine in `p` with slope `BΔ - t`, so the optimum sits at an
/// endpoint: `Unique(Influence)` means `p = 1`, `Unique(NoInfluence)` means
/// `p = 0`, and a zero slope is reported as indifference.
pub fn best_corporation_p(
    params: &GameParams,
    cond: &ConditionalStrategy,
) -> Response<CorporationAction> {
    let delta = cond.delta().value();
    let threshold = params.transfer() / params.benefit();
    if delta > threshold {
        Response::Unique(CorporationAction::Influence)
    } else if delta < threshold {
        Response::Unique(CorporationAction::NoInfluence)
    } else {
        Response::Indifferent
    }
}

/// `ΔC < t < ΔB`.
pub fn feasible_by_transfer(benefit: f64, cost: f64, transfer: f64, delta: f64) -> bool {
    delta * cost < transfer && transfer < delta * benefit
}

/// `t/B < Δ < t/C`.
pub fn feasible_by_delta(benefit: f64, cost: f64, transfer: f64, delta: f64) -> bool {
    transfer / benefit < delta && delta < transfer / cost
}

/// `C < t/Δ < B`, only meaningful for `Δ > 0`.
pub fn feasible_by_price(benefit: f64, cost: f64, transfer: f64, delta: f64) -> bool {
    if delta <= 0.0 {
        return false;
    }
    let price = transfer / delta;
    cost < price && price < benefit
}

/// Whether collusion at influence `delta` strictly benefits both players.
pub fn collusion_feasible(params: &GameParams, delta: Delta) -> bool {
    feasible_by_transfer(
        params.benefit(),
        params.cost(),
        params.transfer(),
        delta.value(),
    )
}

/// Feasibility with a depreciating transfer: `ΔB > t_c` and `t_r > ΔC`.
pub fn collusion_feasible_asymmetric(
    benefit: f64,
    cost: f64,
    delta: Delta,
    transfer: &AsymmetricTransfer,
) -> bool {
    let d = delta.value();
    d * benefit > transfer.cost_to_corporation && transfer.benefit_to_regulator > d * cost
}

/// Effective price of influence, `t/Δ`.
pub fn influence_price(transfer: f64, delta: Delta) -> Result<f64> {
    if delta.value() > 0.0 {
        Ok(transfer / delta.value())
    } else {
        Err(ModelError::UndefinedPrice {
            delta: delta.value(),
        })
    }
}

/// Feasibility verdict and the profit split implied by `(t, Δ)`.
///
/// Profits are reported with their sign even when collusion is infeasible, so
/// sweeps stay continuous across the feasibility boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollusionReport {
    pub feasible: bool,
    /// `Δ(B - C)`.
    pub total_profit: f64,
    /// `t - ΔC`.
    pub regulator_profit: f64,
    /// `ΔB - t`.
    pub corporation_profit: f64,
    /// `None` when the total profit is zero.
    pub regulator_share: Option<f64>,
    pub corporation_share: Option<f64>,
    /// `None` unless `Δ > 0`.
    pub influence_price: Option<f64>,
}

pub fn collusion_report(params: &GameParams, delta: Delta) -> CollusionReport {
    let (b, c, t, d) = (
        params.benefit(),
        params.cost(),
        params.transfer(),
        delta.value(),
    );
    // Same products as the feasibility test, so profit signs match the flag.
    let realized_cost = d * c;
    let realized_benefit = d * b;
    let regulator_profit = t - realized_cost;
    let corporation_profit = realized_benefit - t;
    let total_profit = realized_benefit - realized_cost;
    let (regulator_share, corporation_share) = if total_profit != 0.0 {
        (
            Some(regulator_profit / total_profit),
            Some(corporation_profit / total_profit),
        )
    } else {
        (None, None)
    };
    CollusionReport {
        feasible: collusion_feasible(params, delta),
        total_profit,
        regulator_profit,
        corporation_profit,
        regulator_share,
        corporation_share,
        influence_price: influence_price(t, delta).ok(),
    }
}

/// Interval of feasible influence, `(t/B, min(t/C, 1))`.
///
/// Requires `t > 0`; with `C = 0` the upper end is 1.
pub fn feasible_interval(params: &GameParams) -> Result<(f64, f64)> {
    let t = params.transfer();
    check("transfer", t, t > 0.0, "t > 0")?;
    let upper = (t / params.cost()).min(1.0);
    Ok((t / params.benefit(), upper))
}

/// Width of the feasible influence interval, `min(t/C, 1) - t/B`.
///
/// Negative when no `Δ` supports collusion.
pub fn feasibility_range(params: &GameParams) -> Result<f64> {
    feasible_interval(params).map(|(lo, hi)| hi - lo)
}
