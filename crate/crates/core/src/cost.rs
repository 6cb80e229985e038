//! Regulator cost from detection risk, assets at risk and integrity.
//!
//! The realized cost of granting influence `Δ` is `Δ(RA + I)`. The game's
//! `C` parameter is the cost of full favoring, `RA + I`, so that the realized
//! cost `ΔC` used throughout [`crate::influence`] agrees with this model.

use crate::error::{check, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostFactors {
    detection_risk: f64,
    assets_at_risk: f64,
    integrity: f64,
}

impl CostFactors {
    /// `detection_risk` in `[0, 1]`; `assets_at_risk` and `integrity` are
    /// non-negative currency amounts.
    pub fn new(detection_risk: f64, assets_at_risk: f64, integrity: f64) -> Result<Self> {
        check(
            "detection_risk",
            detection_risk,
            (0.0..=1.0).contains(&detection_risk),
            "0 <= R <= 1",
        )?;
        check(
            "assets_at_risk",
            assets_at_risk,
            assets_at_risk >= 0.0,
            "A >= 0",
        )?;
        check("integrity", integrity, integrity >= 0.0, "I >= 0")?;
        Ok(Self {
            detection_risk,
            assets_at_risk,
            integrity,
        })
    }

    pub fn detection_risk(&self) -> f64 {
        self.detection_risk
    }

    pub fn assets_at_risk(&self) -> f64 {
        self.assets_at_risk
    }

    pub fn integrity(&self) -> f64 {
        self.integrity
    }
}

/// `RA + I`: the cost of fully favoring the corporation.
pub fn full_influence_cost(factors: &CostFactors) -> f64 {
    factors.detection_risk * factors.assets_at_risk + factors.integrity
}

/// `Δ(RA + I)` for granted influence `delta` in `[0, 1]`.
pub fn expected_cost(delta: f64, factors: &CostFactors) -> Result<f64> {
    check(
        "delta",
        delta,
        (0.0..=1.0).contains(&delta),
        "0 <= delta <= 1",
    )?;
    Ok(delta * full_influence_cost(factors))
}
