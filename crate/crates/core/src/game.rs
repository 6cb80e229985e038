//! The one-shot regulator/corporation game.
//!
//! The regulator chooses to favor the corporation ([`RegulatorAction::Favor`])
//! at a personal cost `C`, or not. The corporation chooses whether to attempt
//! influence with a transfer `t`. A favorable decision yields benefit `B` to
//! the corporation. Payoffs are `(regulator, corporation)`:
//!
//! |            | NI       | I            |
//! |------------|----------|--------------|
//! | **NF**     | (0, 0)   | (t, -t)      |
//! | **F**      | (-C, B)  | (t - C, B - t) |
//!
//! All comparisons are exact `f64` comparisons. Ties surface as
//! [`Response::Indifferent`] and weakly stable profiles are all reported by
//! [`nash_equilibrium`].

use std::fmt;

use crate::error::{check, Result};

/// Benefit, cost and transfer of one game instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameParams {
    benefit: f64,
    cost: f64,
    transfer: f64,
}

impl GameParams {
    /// `benefit > 0`, `cost >= 0`, `transfer >= 0`, all finite.
    ///
    /// `cost == 0` and `transfer == 0` are admitted as degenerate boundary
    /// cases so sweeps that touch zero stay well-defined.
    pub fn new(benefit: f64, cost: f64, transfer: f64) -> Result<Self> {
        check("benefit", benefit, benefit > 0.0, "B > 0")?;
        check("cost", cost, cost >= 0.0, "C >= 0")?;
        check("transfer", transfer, transfer >= 0.0, "t >= 0")?;
        Ok(Self {
            benefit,
            cost,
            transfer,
        })
    }

    pub fn benefit(&self) -> f64 {
        self.benefit
    }

    pub fn cost(&self) -> f64 {
        self.cost
    }

    pub fn transfer(&self) -> f64 {
        self.transfer
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegulatorAction {
    NotFavor,
    Favor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CorporationAction {
    NoInfluence,
    Influence,
}

impl RegulatorAction {
    pub const ALL: [RegulatorAction; 2] = [RegulatorAction::NotFavor, RegulatorAction::Favor];

    pub fn other(self) -> Self {
        match self {
            RegulatorAction::NotFavor => RegulatorAction::Favor,
            RegulatorAction::Favor => RegulatorAction::NotFavor,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RegulatorAction::NotFavor => "NF",
            RegulatorAction::Favor => "F",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl CorporationAction {
    pub const ALL: [CorporationAction; 2] =
        [CorporationAction::NoInfluence, CorporationAction::Influence];

    pub fn other(self) -> Self {
        match self {
            CorporationAction::NoInfluence => CorporationAction::Influence,
            CorporationAction::Influence => CorporationAction::NoInfluence,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CorporationAction::NoInfluence => "NI",
            CorporationAction::Influence => "I",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RegulatorAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl fmt::Display for CorporationAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One action per player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionProfile {
    pub regulator: RegulatorAction,
    pub corporation: CorporationAction,
}

impl ActionProfile {
    /// All four profiles in table order: (NF,NI), (NF,I), (F,NI), (F,I).
    pub const ALL: [ActionProfile; 4] = [
        ActionProfile::new(RegulatorAction::NotFavor, CorporationAction::NoInfluence),
        ActionProfile::new(RegulatorAction::NotFavor, CorporationAction::Influence),
        ActionProfile::new(RegulatorAction::Favor, CorporationAction::NoInfluence),
        ActionProfile::new(RegulatorAction::Favor, CorporationAction::Influence),
    ];

    pub const fn new(regulator: RegulatorAction, corporation: CorporationAction) -> Self {
        Self {
            regulator,
            corporation,
        }
    }

    /// Position in [`ActionProfile::ALL`].
    pub fn index(self) -> usize {
        self.regulator.index() * 2 + self.corporation.index()
    }
}

impl fmt::Display for ActionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.regulator, self.corporation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffPair {
    pub regulator: f64,
    pub corporation: f64,
}

impl PayoffPair {
    pub const fn new(regulator: f64, corporation: f64) -> Self {
        Self {
            regulator,
            corporation,
        }
    }

    pub fn total(&self) -> f64 {
        self.regulator + self.corporation
    }
}

/// Result of a best-response query: a unique best action or a tie.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Response<A> {
    Unique(A),
    Indifferent,
}

impl<A: Copy + PartialEq> Response<A> {
    /// Whether `action` is a (weak) best response.
    pub fn admits(&self, action: A) -> bool {
        match self {
            Response::Unique(a) => *a == action,
            Response::Indifferent => true,
        }
    }
}

impl<A: fmt::Display> fmt::Display for Response<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Response::Unique(a) => write!(f, "{a}"),
            Response::Indifferent => f.write_str("indifferent"),
        }
    }
}

/// A raw 2x2 bimatrix indexed by `[regulator][corporation]`.
///
/// Carries no sign constraints so the equilibrium scanner can be exercised on
/// arbitrary payoff tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bimatrix {
    cells: [[PayoffPair; 2]; 2],
}

impl Bimatrix {
    pub fn new(cells: [[PayoffPair; 2]; 2]) -> Self {
        Self { cells }
    }

    pub fn from_params(params: &GameParams) -> Self {
        let (b, c, t) = (params.benefit, params.cost, params.transfer);
        Self::new([
            // `0.0 - x` keeps zero parameters as +0 in the table.
            [PayoffPair::new(0.0, 0.0), PayoffPair::new(t, 0.0 - t)],
            [PayoffPair::new(0.0 - c, b), PayoffPair::new(t - c, b - t)],
        ])
    }

    pub fn cell(&self, profile: ActionProfile) -> PayoffPair {
        self.cells[profile.regulator.index()][profile.corporation.index()]
    }

    pub fn regulator_response(&self, corporation: CorporationAction) -> Response<RegulatorAction> {
        let nf = self
            .cell(ActionProfile::new(RegulatorAction::NotFavor, corporation))
            .regulator;
        let f = self
            .cell(ActionProfile::new(RegulatorAction::Favor, corporation))
            .regulator;
        compare(nf, f, RegulatorAction::NotFavor, RegulatorAction::Favor)
    }

    pub fn corporation_response(&self, regulator: RegulatorAction) -> Response<CorporationAction> {
        let ni = self
            .cell(ActionProfile::new(
                regulator,
                CorporationAction::NoInfluence,
            ))
            .corporation;
        let i = self
            .cell(ActionProfile::new(regulator, CorporationAction::Influence))
            .corporation;
        compare(
            ni,
            i,
            CorporationAction::NoInfluence,
            CorporationAction::Influence,
        )
    }

    /// Profiles where each action is a weak best response to the other.
    pub fn pure_nash(&self) -> Vec<ActionProfile> {
        ActionProfile::ALL
            .into_iter()
            .filter(|p| {
                self.regulator_response(p.corporation).admits(p.regulator)
                    && self.corporation_response(p.regulator).admits(p.corporation)
            })
            .collect()
    }
}

fn compare<A>(first: f64, second: f64, a: A, b: A) -> Response<A> {
    if first > second {
        Response::Unique(a)
    } else if second > first {
        Response::Unique(b)
    } else {
        Response::Indifferent
    }
}

pub fn payoff(params: &GameParams, profile: ActionProfile) -> PayoffPair {
    Bimatrix::from_params(params).cell(profile)
}

pub fn best_response_regulator(
    params: &GameParams,
    corporation: CorporationAction,
) -> Response<RegulatorAction> {
    Bimatrix::from_params(params).regulator_response(corporation)
}

pub fn best_response_corporation(
    params: &GameParams,
    regulator: RegulatorAction,
) -> Response<CorporationAction> {
    Bimatrix::from_params(params).corporation_response(regulator)
}

/// Pure-strategy equilibria under independent play, in table order.
///
/// For strictly positive benefit, cost and transfer this is exactly `{(NF,NI)}`.
pub fn nash_equilibrium(params: &GameParams) -> Vec<ActionProfile> {
    Bimatrix::from_params(params).pure_nash()
}

/// Profile maximizing the joint payoff, with every tied maximizer.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalOptimum {
    pub profile: ActionProfile,
    pub total: f64,
    pub maximizers: Vec<ActionProfile>,
}

// Tie-break order: the status quo keeps ties against favoring, and mutual
// collusion (F,I) wins the (F,I)/(F,NI) tie.
const OPTIMUM_PRIORITY: [ActionProfile; 4] = [
    ActionProfile::new(RegulatorAction::NotFavor, CorporationAction::NoInfluence),
    ActionProfile::new(RegulatorAction::Favor, CorporationAction::Influence),
    ActionProfile::new(RegulatorAction::NotFavor, CorporationAction::Influence),
    ActionProfile::new(RegulatorAction::Favor, CorporationAction::NoInfluence),
];

/// Joint payoff of a profile with the transfer cancelled exactly: `B - C` when
/// the regulator favors, otherwise 0.
///
/// Summing the two table entries instead can round `(t - C) + (B - t)` away
/// from `B - C` and split ties that are structural.
pub fn joint_payoff(params: &GameParams, profile: ActionProfile) -> f64 {
    match profile.regulator {
        RegulatorAction::Favor => params.benefit - params.cost,
        RegulatorAction::NotFavor => 0.0,
    }
}

pub fn global_optimum(params: &GameParams) -> GlobalOptimum {
    let total = ActionProfile::ALL
        .iter()
        .map(|&p| joint_payoff(params, p))
        .fold(f64::NEG_INFINITY, f64::max);
    let maximizers: Vec<ActionProfile> = ActionProfile::ALL
        .into_iter()
        .filter(|&p| joint_payoff(params, p) == total)
        .collect();
    let profile = OPTIMUM_PRIORITY
        .into_iter()
        .find(|p| maximizers.contains(p))
        .expect("at least one profile attains the maximum");
    GlobalOptimum {
        profile,
        total,
        maximizers,
    }
}
