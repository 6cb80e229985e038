//! Regulator-corporation collusion game.
//!
//! A one-shot 2x2 game ([`game`]) whose only pure equilibrium is mutual
//! abstention, extended with conditional strategies ([`influence`]) under
//! which collusion pays both players when `ΔC < t < ΔB`. Supporting modules
//! cover the regulator's cost decomposition ([`cost`]), an influence market
//! ([`market`]), a seeded Monte Carlo check of the expected utilities
//! ([`simulation`]) and the parameter grids behind the profit and
//! feasibility figures ([`sweep`]).

pub mod cost;
pub mod error;
pub mod game;
pub mod influence;
pub mod market;
pub mod simulation;
pub mod sweep;

pub use cost::{expected_cost, full_influence_cost, CostFactors};
pub use error::{ModelError, Result};
pub use game::{
    best_response_corporation, best_response_regulator, global_optimum, joint_payoff,
    nash_equilibrium, payoff, ActionProfile, Bimatrix, CorporationAction, GameParams,
    GlobalOptimum, PayoffPair, RegulatorAction, Response,
};
pub use influence::{
    best_corporation_p, collusion_feasible, collusion_feasible_asymmetric, collusion_report,
    expected_utility_corporation, expected_utility_regulator, feasibility_range, feasible_interval,
    influence_price, AsymmetricTransfer, CollusionReport, ConditionalStrategy, CorporationStrategy,
    Delta,
};
pub use market::{
    case_study_metrics, match_corporation, CaseStudyInput, CaseStudyMetrics, RegulatorOffer,
};
pub use simulation::{run_simulation, SimulationConfig, SimulationResult, RNG_ALGORITHM};
pub use sweep::{
    sweep_custom, sweep_figure1, sweep_figure2, Axis, CustomCell, Fig1Cell, Fig2Cell, Spacing,
    SweepGrid,
};
