//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regcap_core::game::{CorporationAction::*, RegulatorAction::*};
use regcap_core::influence::{feasible_by_delta, feasible_by_price, feasible_by_transfer};
use regcap_core::sweep::{
    default_fig1_deltas, default_fig1_ratios, default_fig2_benefits, default_fig2_costs,
};
use regcap_core::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Sampler(ChaCha8Rng);

impl Sampler {
    fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform on `[0, 1)`.
    fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform on `(0, hi]`.
    fn upper_closed(&mut self, hi: f64) -> f64 {
        (1.0 - self.unit()) * hi
    }

    fn log_uniform(&mut self, lo_exp: f64, hi_exp: f64) -> f64 {
        10f64.powf(lo_exp + (hi_exp - lo_exp) * self.unit())
    }
}

fn regcap(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_regcap"))
        .args(args)
        .output()
        .expect("regcap binary runs")
}

fn ulp_distance(a: f64, b: f64) -> u64 {
    // Same-sign finite values only; feasible profits are positive.
    (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
}

/// Unilateral-deviation scan over the raw cells.
fn brute_force_nash(g: &GameParams) -> Vec<ActionProfile> {
    ActionProfile::ALL
        .into_iter()
        .filter(|&p| {
            let here = payoff(g, p);
            let r = payoff(g, ActionProfile::new(p.regulator.other(), p.corporation));
            let c = payoff(g, ActionProfile::new(p.regulator, p.corporation.other()));
            here.regulator >= r.regulator && here.corporation >= c.corporation
        })
        .collect()
}

fn nash_baseline() -> Outcome {
    let mut s = Sampler::new(0x4e41_5348);
    let start = Instant::now();
    let expected = vec![ActionProfile::new(NotFavor, NoInfluence)];
    let mut bad = 0;
    for _ in 0..1000 {
        let g = GameParams::new(
            s.upper_closed(1e6),
            s.upper_closed(1e6),
            s.upper_closed(1e6),
        )
        .unwrap();
        let found = nash_equilibrium(&g);
        if found != expected || found != brute_force_nash(&g) {
            bad += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed < Duration::from_secs(1),
        format!("1000 samples, {bad} mismatches, {elapsed:?} (< 1 s)"),
    )
}

/// The 100x100x100 grid with one influence draw per cell. Returns the
/// feasibility-equivalence and profit-identity outcomes.
fn feasibility_grid() -> (Outcome, Outcome) {
    let mut s = Sampler::new(0x4645_4153);
    let axis =
        |s: &mut Sampler| -> Vec<f64> { (0..100).map(|_| s.log_uniform(-3.0, 6.0)).collect() };
    let (bs, cs, ts) = (axis(&mut s), axis(&mut s), axis(&mut s));

    let mut disagreements = 0u64;
    let mut feasible = 0u64;
    let mut worst_ulp = 0u64;
    let mut worst_share = 0.0f64;
    for &b in &bs {
        for &c in &cs {
            for &t in &ts {
                let d = 1.0 - s.unit();
                let by_t = feasible_by_transfer(b, c, t, d);
                let by_d = feasible_by_delta(b, c, t, d);
                let by_p = feasible_by_price(b, c, t, d);
                if by_t != by_d || by_t != by_p {
                    disagreements += 1;
                }
                let g = GameParams::new(b, c, t).unwrap();
                let report = collusion_report(&g, Delta::new(d).unwrap());
                if report.feasible {
                    feasible += 1;
                    let sum = report.regulator_profit + report.corporation_profit;
                    worst_ulp = worst_ulp.max(ulp_distance(sum, report.total_profit));
                    let shares =
                        report.regulator_share.unwrap() + report.corporation_share.unwrap();
                    worst_share = worst_share.max((shares - 1.0).abs());
                }
            }
        }
    }
    (
        outcome(
            disagreements == 0,
            format!("10^6 samples ({feasible} feasible), {disagreements} disagreements"),
        ),
        outcome(
            feasible > 0 && worst_ulp <= 1 && worst_share <= 1e-12,
            format!(
                "{feasible} feasible samples, max |sum - Δ(B-C)| = {worst_ulp} ulp (<= 1), max |shares - 1| = {worst_share:e} (<= 1e-12)"
            ),
        ),
    )
}

fn monte_carlo() -> Outcome {
    let start = Instant::now();
    let g = GameParams::new(10.0, 2.0, 1.0).unwrap();
    let cond = ConditionalStrategy::new(0.3, 0.0).unwrap();
    let corp = CorporationStrategy::new(1.0).unwrap();
    let mut good = 0;
    for seed in 0..100u64 {
        let cfg = SimulationConfig::new(g, cond, corp, 1_000_000, seed).unwrap();
        let r = run_simulation(&cfg);
        let ok_r = (r.empirical_u_regulator - 0.4).abs() <= 3.0 * r.std_error_regulator;
        let ok_c = (r.empirical_u_corporation - 2.0).abs() <= 3.0 * r.std_error_corporation;
        if ok_r && ok_c {
            good += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        good >= 99 && elapsed < Duration::from_secs(30),
        format!("{good}/100 seeds within 3 SE (>= 99), {elapsed:?} (< 30 s)"),
    )
}

fn figure1() -> Outcome {
    let grid = sweep_figure1(default_fig1_deltas(), default_fig1_ratios()).unwrap();
    let at = |d: f64, r: f64| {
        grid.cells()
            .iter()
            .find(|c| c.delta == d && c.benefit_over_cost == r)
            .map(|c| c.profit_over_cost)
    };
    let spot1 = at(1.0, 1000.0);
    let spot2 = at(0.001, 1e4);
    let spots = matches!(spot1, Some(v) if (v - 999.0).abs() <= 1e-9)
        && matches!(spot2, Some(v) if (v - 9.999).abs() <= 1e-9);
    let formula = grid
        .cells()
        .iter()
        .all(|c| c.profit_over_cost == c.delta * (c.benefit_over_cost - 1.0));

    // Every line is affine in B/C with slope Δ.
    let mut collinear = true;
    for &d in default_fig1_deltas().points() {
        let line: Vec<_> = grid.cells().iter().filter(|c| c.delta == d).collect();
        let (a, m, z) = (line[0], line[line.len() / 2], line[line.len() - 1]);
        let slope1 =
            (m.profit_over_cost - a.profit_over_cost) / (m.benefit_over_cost - a.benefit_over_cost);
        let slope2 =
            (z.profit_over_cost - m.profit_over_cost) / (z.benefit_over_cost - m.benefit_over_cost);
        collinear &= (slope1 - d).abs() <= 1e-12 * d && (slope2 - d).abs() <= 1e-12 * d;
    }
    outcome(
        spots && formula && collinear,
        format!(
            "(1, 1000) -> {spot1:?}, (0.001, 1e4) -> {spot2:?}, formula {formula}, collinear {collinear}"
        ),
    )
}

fn figure2() -> Outcome {
    let grid = sweep_figure2(default_fig2_benefits(), default_fig2_costs(), 1.0).unwrap();
    let at = |b: f64, c: f64| {
        grid.cells()
            .iter()
            .find(|x| x.benefit == b && x.cost == c)
            .map(|x| x.range)
    };
    let spot1 = at(1000.0, 0.5);
    let spot2 = at(1.0, 1.0);
    let mut positive = 0;
    let mut midpoint_fail = 0;
    for cell in grid.cells() {
        if cell.range > 0.0 {
            positive += 1;
            let g = GameParams::new(cell.benefit, cell.cost, cell.transfer).unwrap();
            let (lo, hi) = feasible_interval(&g).unwrap();
            if !collusion_feasible(&g, Delta::new((lo + hi) / 2.0).unwrap()) {
                midpoint_fail += 1;
            }
        }
    }
    let csv = String::from_utf8(regcap(&["sweep", "fig2"]).stdout).unwrap();
    let emitted =
        csv.lines().any(|l| l == "1000,0.5,1,0.999") && csv.lines().any(|l| l == "1,1,1,0");
    outcome(
        spot1 == Some(0.999) && spot2 == Some(0.0) && midpoint_fail == 0 && emitted,
        format!(
            "(1000, 0.5) -> {spot1:?}, (1, 1) -> {spot2:?}, {positive} positive cells, {midpoint_fail} midpoint failures, CLI rows present {emitted}"
        ),
    )
}

fn case_study() -> Outcome {
    let out = regcap(&["case-study"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let get = |key: &str| -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key}: ")))
            .and_then(|v| v.parse().ok())
            .unwrap_or(f64::NAN)
    };
    let (roi, member, vote) = (get("roi"), get("per_member"), get("per_vote"));
    let pass = out.status.success()
        && roi >= 220.0
        && member > 530_000.0
        && (member - 530_000.0).abs() <= 0.01 * 530_000.0
        && (vote - 810_000.0).abs() <= 0.01 * 810_000.0;
    outcome(
        pass,
        format!("roi {roi:.2} (>= 220), per_member {member:.0}, per_vote {vote:.0} (within 1%)"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let runs: &[&[&str]] = &[
        &["sweep", "fig1"],
        &["sweep", "fig2"],
        &[
            "sweep",
            "custom",
            "--benefit-axis",
            "r10:1:100",
            "--cost-axis",
            "lin:0.5:4:8",
            "--transfer-axis",
            "0.5,1,2",
            "--deltas",
            "lin:0:1:21",
        ],
        &[
            "simulate", "-B", "10", "-C", "2", "-t", "1", "--pfi", "0.3", "--pfni", "0", "--p",
            "1", "--rounds", "100000", "--seed", "42",
        ],
    ];
    let mut identical = 0;
    for (i, args) in runs.iter().enumerate() {
        let mut contents = Vec::new();
        for rep in 0..2 {
            let path = dir.path().join(format!("run{i}-{rep}.csv"));
            let mut full: Vec<&str> = args.to_vec();
            let p = path.to_str().unwrap().to_string();
            full.extend(["--out", &p]);
            let status = regcap(&full).status;
            assert!(status.success(), "{full:?}");
            contents.push(fs::read(&path).unwrap());
        }
        if contents[0] == contents[1] && !contents[0].is_empty() {
            identical += 1;
        }
    }
    outcome(
        identical == runs.len(),
        format!(
            "{identical}/{} commands byte-identical across repeats",
            runs.len()
        ),
    )
}

fn cost_bridge() -> Outcome {
    let mut s = Sampler::new(0x434f_5354);
    let mut mismatches = 0;
    for _ in 0..100_000 {
        let f = CostFactors::new(s.unit(), s.upper_closed(1e7), s.upper_closed(1e6)).unwrap();
        let d = s.unit();
        if expected_cost(d, &f).unwrap() != d * full_influence_cost(&f) {
            mismatches += 1;
        }
    }
    let mut increases = 0;
    for &(b, t, r, a) in &[
        (50.0, 1.0, 0.05, 20.0),
        (1e4, 1.0, 0.5, 0.1),
        (3.0, 2.0, 0.9, 1.0),
    ] {
        let mut last = f64::INFINITY;
        for step in 0..=500 {
            let f = CostFactors::new(r, a, step as f64 * 0.02).unwrap();
            let range = feasibility_range(&GameParams::new(b, full_influence_cost(&f), t).unwrap())
                .unwrap();
            if range > last {
                increases += 1;
            }
            last = range;
        }
    }
    outcome(
        mismatches == 0 && increases == 0,
        format!("100000 factor draws, {mismatches} mismatches; {increases} range increases over rising I"),
    )
}

fn main() -> ExitCode {
    let (equivalence, identity) = feasibility_grid();
    let results = [
        ("nash baseline", nash_baseline()),
        ("feasibility equivalence", equivalence),
        ("profit identity", identity),
        ("monte carlo convergence", monte_carlo()),
        ("figure 1 data", figure1()),
        ("figure 2 data", figure2()),
        ("case study", case_study()),
        ("determinism", determinism()),
        ("cost bridge", cost_bridge()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "{} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
