//! Influence market: a corporation choosing among competing regulators, and
//! the lobbying case-study arithmetic.

use crate::error::{check, Result};
use crate::influence::{feasible_by_price, Delta};

/// A regulator's offer to sell influence `Δ` for transfer `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegulatorOffer {
    delta: f64,
    transfer: f64,
    cost: f64,
}

impl RegulatorOffer {
    /// `delta` in `(0, 1]`, `transfer >= 0`, `cost >= 0`.
    ///
    /// Offers that do not cover the regulator's own realized cost are
    /// representable; see [`RegulatorOffer::is_individually_rational`].
    pub fn new(delta: f64, transfer: f64, cost: f64) -> Result<Self> {
        check(
            "delta",
            delta,
            delta > 0.0 && delta <= 1.0,
            "0 < delta <= 1",
        )?;
        check("transfer", transfer, transfer >= 0.0, "t >= 0")?;
        check("cost", cost, cost >= 0.0, "C >= 0")?;
        Ok(Self {
            delta,
            transfer,
            cost,
        })
    }

    pub fn delta(&self) -> Delta {
        Delta::new(self.delta).expect("validated at construction")
    }

    pub fn transfer(&self) -> f64 {
        self.transfer
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    /// `t / Δ`.
    pub fn price(&self) -> f64 {
        self.transfer / self.delta
    }

    /// `t > ΔC`: the regulator gains from making the sale.
    pub fn is_individually_rational(&self) -> bool {
        self.transfer > self.delta * self.cost
    }

    /// `ΔB - t`.
    pub fn corporation_profit(&self, benefit: f64) -> f64 {
        self.delta * benefit - self.transfer
    }

    /// `t - ΔC`.
    pub fn regulator_profit(&self) -> f64 {
        self.transfer - self.delta * self.cost
    }

    /// Whether the sale clears both rationality bounds, `C < t/Δ < B`, with a
    /// positive corporation profit.
    pub fn qualifies(&self, benefit: f64) -> bool {
        self.corporation_profit(benefit) > 0.0
            && feasible_by_price(benefit, self.cost, self.transfer, self.delta)
    }
}

/// Index of the offer a corporation with benefit `benefit` should accept.
///
/// Maximizes `ΔB - t` over qualifying offers. Ties go to the lowest price,
/// then the lowest index. `None` when nothing qualifies, including an empty
/// market.
pub fn match_corporation(benefit: f64, offers: &[RegulatorOffer]) -> Option<usize> {
    offers
        .iter()
        .enumerate()
        .filter(|(_, o)| o.qualifies(benefit))
        .fold(
            None,
            |best: Option<(usize, &RegulatorOffer)>, (i, o)| match best {
                None => Some((i, o)),
                Some((_, b)) => {
                    let (po, pb) = (o.corporation_profit(benefit), b.corporation_profit(benefit));
                    if po > pb || (po == pb && o.price() < b.price()) {
                        Some((i, o))
                    } else {
                        best
                    }
                }
            },
        )
        .map(|(i, _)| i)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseStudyInput {
    pub total_lobbying_spend: f64,
    pub total_benefit: f64,
    pub member_count: u32,
    pub favorable_vote_count: u32,
}

impl CaseStudyInput {
    /// Lobbying for the American Jobs Creation Act of 2004: $282.7M spent,
    /// $62.5B in tax savings, 433 Representatives plus 100 Senators, and
    /// 280 + 69 favorable votes.
    pub const AMERICAN_JOBS_CREATION_ACT: CaseStudyInput = CaseStudyInput {
        total_lobbying_spend: 282.7e6,
        total_benefit: 62.5e9,
        member_count: 433 + 100,
        favorable_vote_count: 280 + 69,
    };

    pub fn new(
        total_lobbying_spend: f64,
        total_benefit: f64,
        member_count: u32,
        favorable_vote_count: u32,
    ) -> Result<Self> {
        check(
            "total_lobbying_spend",
            total_lobbying_spend,
            total_lobbying_spend > 0.0,
            "spend > 0",
        )?;
        check(
            "total_benefit",
            total_benefit,
            total_benefit > 0.0,
            "benefit > 0",
        )?;
        check(
            "member_count",
            member_count as f64,
            member_count > 0,
            "members > 0",
        )?;
        check(
            "favorable_vote_count",
            favorable_vote_count as f64,
            favorable_vote_count > 0,
            "votes > 0",
        )?;
        Ok(Self {
            total_lobbying_spend,
            total_benefit,
            member_count,
            favorable_vote_count,
        })
    }
}

impl Default for CaseStudyInput {
    fn default() -> Self {
        Self::AMERICAN_JOBS_CREATION_ACT
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseStudyMetrics {
    /// Benefit per unit of lobbying spend.
    pub roi: f64,
    pub per_member: f64,
    pub per_vote: f64,
}

pub fn case_study_metrics(input: &CaseStudyInput) -> CaseStudyMetrics {
    CaseStudyMetrics {
        roi: input.total_benefit / input.total_lobbying_spend,
        per_member: input.total_lobbying_spend / input.member_count as f64,
        per_vote: input.total_lobbying_spend / input.favorable_vote_count as f64,
    }
}
