//! Command-line front end for the regulator-corporation collusion game.
//!
//! Subcommands: `nash`, `feasibility`, `sweep`, `simulate`, `case-study` and
//! `market`. Each resolves its settings from flags, then an optional
//! `--config` file, then defaults, and emits a report whose first line is a
//! `#` metadata comment. See [`output`] for the framing rules.

pub mod commands;
pub mod config;
pub mod error;
pub mod offers;
pub mod output;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regcap_core::Spacing;

pub use error::{CliError, EXIT_IO, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "regcap",
    version,
    about = "Regulator-corporation collusion game laboratory"
)]
pub struct Cli {
    /// Flat `key = value` file supplying settings not given as flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Payoff table, best responses, pure Nash equilibria and the joint optimum.
    Nash(NashArgs),
    /// Collusion feasibility for a given influence, or the feasible interval.
    Feasibility(FeasibilityArgs),
    /// Write figure data or a custom parameter grid as CSV.
    Sweep(SweepArgs),
    /// Monte Carlo estimate of the expected utilities.
    Simulate(SimulateArgs),
    /// Lobbying return and spend per member and per favorable vote.
    CaseStudy(CaseStudyArgs),
    /// Pick the best regulator offer from a CSV offers file.
    Market(MarketArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
    Custom,
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Custom => "custom",
        })
    }
}

/// Axis syntax: `lin:MIN:MAX:STEPS`, `log:MIN:MAX:STEPS`, `r10:MIN:MAX`
/// (R10 preferred numbers), or a value list `values:V1;V2;...` (a bare list
/// separated by `;` or `,` also works).
#[derive(Debug, Clone, PartialEq)]
pub struct AxisSpec(pub Spacing);

impl FromStr for AxisSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |x: &str| -> Result<f64, String> {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid number `{x}` in axis `{s}`"))
        };
        let steps = |x: &str| -> Result<usize, String> {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid step count `{x}` in axis `{s}`"))
        };
        let list = |x: &str| -> Result<Vec<f64>, String> {
            x.split([';', ','])
                .filter(|p| !p.trim().is_empty())
                .map(num)
                .collect()
        };
        let parts: Vec<&str> = s.split(':').collect();
        let spacing = match parts.as_slice() {
            ["lin", min, max, n] => Spacing::Linear {
                min: num(min)?,
                max: num(max)?,
                steps: steps(n)?,
            },
            ["log", min, max, n] => Spacing::Log {
                min: num(min)?,
                max: num(max)?,
                steps: steps(n)?,
            },
            ["r10", min, max] => Spacing::Renard {
                min: num(min)?,
                max: num(max)?,
            },
            ["values", rest] => Spacing::Values(list(rest)?),
            [bare] => Spacing::Values(list(bare)?),
            _ => return Err(format!("unrecognized axis `{s}`")),
        };
        Ok(AxisSpec(spacing))
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct GameArgs {
    /// Corporation's benefit from a favorable decision, B.
    #[arg(short = 'B', long)]
    pub benefit: Option<f64>,
    /// Regulator's cost of fully favoring, C.
    #[arg(short = 'C', long)]
    pub cost: Option<f64>,
    /// Transfer offered for influence, t.
    #[arg(short = 't', long)]
    pub transfer: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct NashArgs {
    #[command(flatten)]
    pub game: GameArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct FeasibilityArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// Degree of influence, P(F|I) - P(F|NI).
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub figure: Figure,
    /// Influence axis (fig1 lines, custom grid).
    #[arg(long)]
    pub deltas: Option<AxisSpec>,
    /// Benefit-over-cost axis (fig1).
    #[arg(long)]
    pub ratios: Option<AxisSpec>,
    /// Benefit axis (fig2, custom).
    #[arg(long = "benefit-axis")]
    pub benefit_axis: Option<AxisSpec>,
    /// Cost axis (fig2, custom).
    #[arg(long = "cost-axis")]
    pub cost_axis: Option<AxisSpec>,
    /// Transfer axis (custom).
    #[arg(long = "transfer-axis")]
    pub transfer_axis: Option<AxisSpec>,
    /// Fixed transfer (fig2).
    #[arg(short = 't', long)]
    pub transfer: Option<f64>,
    /// Output CSV path; stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub game: GameArgs,
    /// P(F|I).
    #[arg(long)]
    pub pfi: Option<f64>,
    /// P(F|NI); defaults to 0.
    #[arg(long)]
    pub pfni: Option<f64>,
    /// Probability the corporation attempts influence.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub rounds: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Also write the CSV report to this path.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CaseStudyArgs {
    /// Total lobbying spend.
    #[arg(long, allow_hyphen_values = true)]
    pub spend: Option<f64>,
    /// Total benefit obtained.
    #[arg(long, allow_hyphen_values = true)]
    pub benefit: Option<f64>,
    /// Members of the deciding body.
    #[arg(long)]
    pub members: Option<u32>,
    /// Favorable votes cast.
    #[arg(long)]
    pub votes: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct MarketArgs {
    /// CSV with header `delta,transfer,cost`.
    #[arg(long, value_name = "FILE")]
    pub offers: Option<PathBuf>,
    /// Corporation's benefit, B.
    #[arg(short = 'B', long)]
    pub benefit: Option<f64>,
}

/// Runs one parsed invocation and returns what belongs on stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let config = match &cli.config {
        Some(path) => config::ConfigFile::load(path)?,
        None => config::ConfigFile::default(),
    };
    match &cli.command {
        Command::Nash(args) => commands::nash(args, config),
        Command::Feasibility(args) => commands::feasibility(args, config),
        Command::Sweep(args) => commands::sweep(args, config),
        Command::Simulate(args) => commands::simulate(args, config),
        Command::CaseStudy(args) => commands::case_study(args, config),
        Command::Market(args) => commands::market(args, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_syntax() {
        assert_eq!(
            "lin:0:1:5".parse::<AxisSpec>().unwrap().0,
            Spacing::Linear {
                min: 0.0,
                max: 1.0,
                steps: 5
            }
        );
        assert_eq!(
            "r10:1e-2:1e4".parse::<AxisSpec>().unwrap().0,
            Spacing::Renard {
                min: 0.01,
                max: 1e4
            }
        );
        assert_eq!(
            "0.1,0.5".parse::<AxisSpec>().unwrap().0,
            Spacing::Values(vec![0.1, 0.5])
        );
        assert_eq!(
            "values:0.1;0.5".parse::<AxisSpec>().unwrap().0,
            Spacing::Values(vec![0.1, 0.5])
        );
        assert!("log:1:x:3".parse::<AxisSpec>().is_err());
        assert!("cubic:1:2:3".parse::<AxisSpec>().is_err());
    }

    #[test]
    fn axis_display_round_trips() {
        for s in [
            "lin:0:1:5",
            "log:1:1000000:13",
            "r10:0.01:10000",
            "values:0.001;0.5;1",
        ] {
            let spec: AxisSpec = s.parse().unwrap();
            assert_eq!(spec.0.to_string(), s);
        }
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
