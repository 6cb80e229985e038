use std::fs;
use std::path::{Path, PathBuf};

use regcap_core::sweep::{
    default_fig1_deltas, default_fig1_ratios, default_fig2_benefits, default_fig2_costs,
    DEFAULT_FIG2_TRANSFER,
};
use regcap_core::{
    best_response_corporation, best_response_regulator, case_study_metrics, collusion_report,
    feasible_interval, global_optimum, match_corporation, nash_equilibrium, payoff, run_simulation,
    sweep_custom, sweep_figure1, sweep_figure2, ActionProfile, Axis, CaseStudyInput,
    CollusionReport, ConditionalStrategy, CorporationAction, CorporationStrategy, Delta,
    GameParams, RegulatorAction, SimulationConfig, RNG_ALGORITHM,
};

use crate::config::{ConfigFile, Resolver};
use crate::error::CliError;
use crate::output::{num, opt_num, CsvTable, Metadata, TextReport};
use crate::{
    AxisSpec, CaseStudyArgs, FeasibilityArgs, Figure, Format, GameArgs, MarketArgs, NashArgs,
    SimulateArgs, SweepArgs,
};

pub const FIG1_HEADER: &[&str] = &["delta", "benefit_over_cost", "profit_over_cost"];
pub const FIG2_HEADER: &[&str] = &["benefit", "cost", "transfer", "range"];
pub const CUSTOM_HEADER: &[&str] = &[
    "benefit",
    "cost",
    "transfer",
    "delta",
    "feasible",
    "total_profit",
    "regulator_profit",
    "corporation_profit",
    "regulator_share",
    "corporation_share",
    "price",
];
pub const INTERVAL_HEADER: &[&str] = &[
    "benefit",
    "cost",
    "transfer",
    "delta_min",
    "delta_max",
    "range",
];
pub const NASH_HEADER: &[&str] = &[
    "regulator_action",
    "corporation_action",
    "regulator_payoff",
    "corporation_payoff",
    "nash",
    "optimum",
];
pub const SIMULATE_HEADER: &[&str] = &[
    "rounds",
    "seed",
    "count_nf_ni",
    "count_nf_i",
    "count_f_ni",
    "count_f_i",
    "u_regulator_empirical",
    "u_regulator_analytic",
    "u_regulator_gap",
    "u_regulator_std_error",
    "u_corporation_empirical",
    "u_corporation_analytic",
    "u_corporation_gap",
    "u_corporation_std_error",
];

const GAME_KEYS: [&str; 3] = ["benefit", "cost", "transfer"];

fn keys(extra: &[&'static str]) -> Vec<&'static str> {
    GAME_KEYS.iter().chain(extra).copied().collect()
}

fn game_params(r: &Resolver, args: &GameArgs) -> Result<GameParams, CliError> {
    let b = r.required("benefit", args.benefit)?;
    let c = r.required("cost", args.cost)?;
    let t = r.required("transfer", args.transfer)?;
    Ok(GameParams::new(b, c, t)?)
}

fn with_game(meta: Metadata, g: &GameParams) -> Metadata {
    meta.with_num("benefit", g.benefit())
        .with_num("cost", g.cost())
        .with_num("transfer", g.transfer())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn profile_list(profiles: &[ActionProfile]) -> String {
    if profiles.is_empty() {
        return "none".into();
    }
    profiles
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn nash(args: &NashArgs, config: ConfigFile) -> Result<String, CliError> {
    let r = Resolver::new(config, &keys(&["format"]))?;
    let g = game_params(&r, &args.game)?;
    let format = r.or("format", args.format, Format::Text)?;
    let meta = with_game(Metadata::new("nash"), &g);
    let equilibria = nash_equilibrium(&g);
    let optimum = global_optimum(&g);

    if format == Format::Csv {
        let mut table = CsvTable::new(NASH_HEADER);
        for p in ActionProfile::ALL {
            let cell = payoff(&g, p);
            table.push(vec![
                p.regulator.to_string(),
                p.corporation.to_string(),
                num(cell.regulator),
                num(cell.corporation),
                equilibria.contains(&p).to_string(),
                (p == optimum.profile).to_string(),
            ]);
        }
        return Ok(table.render(&meta));
    }

    let mut out = TextReport::default();
    out.line("payoffs (regulator, corporation):");
    for p in ActionProfile::ALL {
        let cell = payoff(&g, p);
        out.line(format!(
            "  {p}: {}, {}",
            num(cell.regulator),
            num(cell.corporation)
        ));
    }
    let reg: Vec<String> = CorporationAction::ALL
        .iter()
        .map(|&a| format!("{a}->{}", best_response_regulator(&g, a)))
        .collect();
    let corp: Vec<String> = RegulatorAction::ALL
        .iter()
        .map(|&a| format!("{a}->{}", best_response_corporation(&g, a)))
        .collect();
    out.field("best_response_regulator", reg.join(" "));
    out.field("best_response_corporation", corp.join(" "));
    out.field("nash_equilibria", profile_list(&equilibria));
    out.field("global_optimum", optimum.profile);
    out.field("global_optimum_total", num(optimum.total));
    out.field("global_optimum_ties", profile_list(&optimum.maximizers));
    Ok(out.render(&meta))
}

fn report_row(g: &GameParams, delta: f64, r: &CollusionReport) -> Vec<String> {
    vec![
        num(g.benefit()),
        num(g.cost()),
        num(g.transfer()),
        num(delta),
        r.feasible.to_string(),
        num(r.total_profit),
        num(r.regulator_profit),
        num(r.corporation_profit),
        opt_num(r.regulator_share),
        opt_num(r.corporation_share),
        opt_num(r.influence_price),
    ]
}

pub fn feasibility(args: &FeasibilityArgs, config: ConfigFile) -> Result<String, CliError> {
    let r = Resolver::new(config, &keys(&["delta", "format"]))?;
    let g = game_params(&r, &args.game)?;
    let delta = r.optional("delta", args.delta)?;
    let format = r.or("format", args.format, Format::Text)?;
    let mut meta = with_game(Metadata::new("feasibility"), &g);

    match delta {
        Some(d) => {
            meta = meta.with_num("delta", d);
            let report = collusion_report(&g, Delta::new(d)?);
            if format == Format::Csv {
                let mut table = CsvTable::new(CUSTOM_HEADER);
                table.push(report_row(&g, d, &report));
                return Ok(table.render(&meta));
            }
            let mut out = TextReport::default();
            out.field("feasible", report.feasible);
            out.field("total_profit", num(report.total_profit));
            out.field("regulator_profit", num(report.regulator_profit));
            out.field("corporation_profit", num(report.corporation_profit));
            out.field("regulator_share", undefined_or(report.regulator_share));
            out.field("corporation_share", undefined_or(report.corporation_share));
            out.field("influence_price", undefined_or(report.influence_price));
            Ok(out.render(&meta))
        }
        None => {
            let (lo, hi) = feasible_interval(&g)?;
            let width = hi - lo;
            if format == Format::Csv {
                let mut table = CsvTable::new(INTERVAL_HEADER);
                table.push(vec![
                    num(g.benefit()),
                    num(g.cost()),
                    num(g.transfer()),
                    num(lo),
                    num(hi),
                    num(width),
                ]);
                return Ok(table.render(&meta));
            }
            let mut out = TextReport::default();
            out.field("delta_min", num(lo));
            out.field("delta_max", num(hi));
            out.field("range", num(width));
            if width > 0.0 {
                out.field(
                    "verdict",
                    format!("collusion feasible for delta in ({}, {})", num(lo), num(hi)),
                );
            } else {
                out.field("verdict", "no feasible influence");
            }
            Ok(out.render(&meta))
        }
    }
}

fn undefined_or(x: Option<f64>) -> String {
    x.map(num).unwrap_or_else(|| "undefined".into())
}

fn axis(
    r: &Resolver,
    key: &str,
    flag: &Option<AxisSpec>,
    default: impl FnOnce() -> Axis,
) -> Result<Axis, CliError> {
    match r.optional::<AxisSpec>(key, flag.clone())? {
        Some(AxisSpec(spacing)) => Ok(Axis::new(key, spacing)?),
        None => Ok(default()),
    }
}

pub fn sweep(args: &SweepArgs, config: ConfigFile) -> Result<String, CliError> {
    // Flags that do not apply to the chosen figure are rejected.
    let given: Vec<(&str, bool)> = vec![
        ("deltas", args.deltas.is_some()),
        ("ratios", args.ratios.is_some()),
        ("benefit-axis", args.benefit_axis.is_some()),
        ("cost-axis", args.cost_axis.is_some()),
        ("transfer-axis", args.transfer_axis.is_some()),
        ("transfer", args.transfer.is_some()),
    ];
    let allowed: &[&str] = match args.figure {
        Figure::Fig1 => &["deltas", "ratios", "out"],
        Figure::Fig2 => &["benefit-axis", "cost-axis", "transfer", "out"],
        Figure::Custom => &[
            "benefit-axis",
            "cost-axis",
            "transfer-axis",
            "deltas",
            "out",
        ],
    };
    if let Some((flag, _)) = given.iter().find(|(k, set)| *set && !allowed.contains(k)) {
        return Err(CliError::Usage(format!(
            "`--{flag}` does not apply to `sweep {}`",
            args.figure
        )));
    }
    let r = Resolver::new(config, allowed)?;
    let out_path: Option<PathBuf> = r.optional("out", args.out.clone())?;
    let meta = Metadata::new("sweep").with("figure", args.figure);

    let (meta, table) = match args.figure {
        Figure::Fig1 => {
            let deltas = axis(&r, "deltas", &args.deltas, default_fig1_deltas)?;
            let ratios = axis(&r, "ratios", &args.ratios, default_fig1_ratios)?;
            let meta = meta
                .with("deltas", deltas.spacing())
                .with("ratios", ratios.spacing());
            let grid = sweep_figure1(deltas, ratios)?;
            let mut table = CsvTable::new(FIG1_HEADER);
            for c in grid.cells() {
                table.push(vec![
                    num(c.delta),
                    num(c.benefit_over_cost),
                    num(c.profit_over_cost),
                ]);
            }
            (meta, table)
        }
        Figure::Fig2 => {
            let benefits = axis(
                &r,
                "benefit-axis",
                &args.benefit_axis,
                default_fig2_benefits,
            )?;
            let costs = axis(&r, "cost-axis", &args.cost_axis, default_fig2_costs)?;
            let transfer = r.or("transfer", args.transfer, DEFAULT_FIG2_TRANSFER)?;
            let meta = meta
                .with("benefit-axis", benefits.spacing())
                .with("cost-axis", costs.spacing())
                .with_num("transfer", transfer);
            let grid = sweep_figure2(benefits, costs, transfer)?;
            let mut table = CsvTable::new(FIG2_HEADER);
            for c in grid.cells() {
                table.push(vec![
                    num(c.benefit),
                    num(c.cost),
                    num(c.transfer),
                    num(c.range),
                ]);
            }
            (meta, table)
        }
        Figure::Custom => {
            let benefits = axis(&r, "benefit-axis", &args.benefit_axis, || {
                Axis::values("benefit-axis", vec![10.0]).expect("valid default axis")
            })?;
            let costs = axis(&r, "cost-axis", &args.cost_axis, || {
                Axis::values("cost-axis", vec![2.0]).expect("valid default axis")
            })?;
            let transfers = axis(&r, "transfer-axis", &args.transfer_axis, || {
                Axis::values("transfer-axis", vec![1.0]).expect("valid default axis")
            })?;
            let deltas = axis(&r, "deltas", &args.deltas, || {
                Axis::linear("deltas", 0.0, 1.0, 101).expect("valid default axis")
            })?;
            let meta = meta
                .with("benefit-axis", benefits.spacing())
                .with("cost-axis", costs.spacing())
                .with("transfer-axis", transfers.spacing())
                .with("deltas", deltas.spacing());
            let grid = sweep_custom(benefits, costs, transfers, deltas)?;
            let mut table = CsvTable::new(CUSTOM_HEADER);
            for c in grid.cells() {
                let g = GameParams::new(c.benefit, c.cost, c.transfer)?;
                table.push(report_row(&g, c.delta, &c.report));
            }
            (meta, table)
        }
    };

    let csv = table.render(&meta);
    match out_path {
        Some(path) => {
            write_file(&path, &csv)?;
            Ok(format!(
                "wrote {} rows to {}\n",
                table.len(),
                path.display()
            ))
        }
        None => Ok(csv),
    }
}

pub fn simulate(args: &SimulateArgs, config: ConfigFile) -> Result<String, CliError> {
    let r = Resolver::new(
        config,
        &keys(&["pfi", "pfni", "p", "rounds", "seed", "format", "out"]),
    )?;
    let g = game_params(&r, &args.game)?;
    let pfi = r.required("pfi", args.pfi)?;
    let pfni = r.or("pfni", args.pfni, 0.0)?;
    let p = r.required("p", args.p)?;
    let rounds = r.or("rounds", args.rounds, 1_000_000)?;
    let seed = r.or("seed", args.seed, 0)?;
    let format = r.or("format", args.format, Format::Text)?;
    let out_path: Option<PathBuf> = r.optional("out", args.out.clone())?;

    let config = SimulationConfig::new(
        g,
        ConditionalStrategy::new(pfi, pfni)?,
        CorporationStrategy::new(p)?,
        rounds,
        seed,
    )?;
    let result = run_simulation(&config);
    let (ur, uc) = config.analytic_utilities();
    let gap_r = (result.empirical_u_regulator - ur).abs();
    let gap_c = (result.empirical_u_corporation - uc).abs();

    let meta = with_game(Metadata::new("simulate"), &g)
        .with_num("pfi", pfi)
        .with_num("pfni", pfni)
        .with_num("p", p)
        .with("rounds", rounds)
        .with("seed", seed)
        .with("rng", RNG_ALGORITHM);

    let mut table = CsvTable::new(SIMULATE_HEADER);
    let mut row = vec![rounds.to_string(), seed.to_string()];
    row.extend(result.counts.iter().map(u64::to_string));
    row.extend(
        [
            result.empirical_u_regulator,
            ur,
            gap_r,
            result.std_error_regulator,
            result.empirical_u_corporation,
            uc,
            gap_c,
            result.std_error_corporation,
        ]
        .map(num),
    );
    table.push(row);
    let csv = table.render(&meta);
    if let Some(path) = &out_path {
        write_file(path, &csv)?;
    }
    if format == Format::Csv {
        return Ok(csv);
    }

    let mut out = TextReport::default();
    for profile in ActionProfile::ALL {
        out.field(&format!("count {profile}"), result.count(profile));
    }
    let in_se = |gap: f64, se: f64| {
        if se > 0.0 {
            num(gap / se)
        } else {
            "undefined".into()
        }
    };
    out.field("u_regulator_empirical", num(result.empirical_u_regulator));
    out.field("u_regulator_analytic", num(ur));
    out.field("u_regulator_gap", num(gap_r));
    out.field("u_regulator_std_error", num(result.std_error_regulator));
    out.field(
        "u_regulator_gap_in_std_errors",
        in_se(gap_r, result.std_error_regulator),
    );
    out.field(
        "u_corporation_empirical",
        num(result.empirical_u_corporation),
    );
    out.field("u_corporation_analytic", num(uc));
    out.field("u_corporation_gap", num(gap_c));
    out.field("u_corporation_std_error", num(result.std_error_corporation));
    out.field(
        "u_corporation_gap_in_std_errors",
        in_se(gap_c, result.std_error_corporation),
    );
    Ok(out.render(&meta))
}

pub fn case_study(args: &CaseStudyArgs, config: ConfigFile) -> Result<String, CliError> {
    let r = Resolver::new(config, &["spend", "benefit", "members", "votes"])?;
    let d = CaseStudyInput::default();
    let input = CaseStudyInput::new(
        r.or("spend", args.spend, d.total_lobbying_spend)?,
        r.or("benefit", args.benefit, d.total_benefit)?,
        r.or("members", args.members, d.member_count)?,
        r.or("votes", args.votes, d.favorable_vote_count)?,
    )?;
    let m = case_study_metrics(&input);
    let meta = Metadata::new("case-study")
        .with_num("spend", input.total_lobbying_spend)
        .with_num("benefit", input.total_benefit)
        .with("members", input.member_count)
        .with("votes", input.favorable_vote_count);
    let mut out = TextReport::default();
    out.field("roi", num(m.roi));
    out.field("per_member", num(m.per_member));
    out.field("per_vote", num(m.per_vote));
    out.field(
        "summary",
        format!(
            "return {:.1}:1, {:.0} spent per member, {:.0} spent per favorable vote",
            m.roi, m.per_member, m.per_vote
        ),
    );
    Ok(out.render(&meta))
}

pub fn market(args: &MarketArgs, config: ConfigFile) -> Result<String, CliError> {
    let r = Resolver::new(config, &["offers", "benefit"])?;
    let path: PathBuf = r.required("offers", args.offers.clone())?;
    let benefit: f64 = r.required("benefit", args.benefit)?;
    if !(benefit.is_finite() && benefit > 0.0) {
        return Err(CliError::Usage(format!(
            "benefit must be positive, got {benefit}"
        )));
    }
    let offers = crate::offers::load(&path)?;
    let chosen = match_corporation(benefit, &offers);

    let meta = Metadata::new("market")
        .with("offers", path.display())
        .with_num("benefit", benefit);
    let mut out = TextReport::default();
    for (i, o) in offers.iter().enumerate() {
        let rational = o.is_individually_rational();
        out.line(format!(
            "offer {i}: delta={} transfer={} cost={} price={} regulator_profit={} corporation_profit={} regulator_rational={}{} qualifies={}",
            num(o.delta().value()),
            num(o.transfer()),
            num(o.cost()),
            num(o.price()),
            num(o.regulator_profit()),
            num(o.corporation_profit(benefit)),
            rational,
            if rational { "" } else { " (excluded)" },
            o.qualifies(benefit),
        ));
    }
    match chosen {
        Some(i) => {
            let o = offers[i];
            out.field(
                "chosen",
                format!(
                    "offer {i} (delta={} transfer={} price={})",
                    num(o.delta().value()),
                    num(o.transfer()),
                    num(o.price())
                ),
            );
        }
        None => out.field("chosen", "no match"),
    }
    Ok(out.render(&meta))
}
