//! Deterministic parameter grids behind the profit and feasibility figures.
//!
//! Cells are stored row-major with the first axis varying slowest. Every cell
//! is a pure function of its coordinates; grids are evaluated in parallel and
//! the result does not depend on evaluation order.

use std::fmt;

use rayon::prelude::*;

use crate::error::{ModelError, Result};
use crate::game::GameParams;
use crate::influence::{collusion_report, feasibility_range, CollusionReport, Delta};

/// R10 preferred-number mantissas: ten log-spaced points per decade.
pub const R10_MANTISSAS: [f64; 10] = [1.0, 1.25, 1.6, 2.0, 2.5, 3.15, 4.0, 5.0, 6.3, 8.0];

#[derive(Debug, Clone, PartialEq)]
pub enum Spacing {
    Linear {
        min: f64,
        max: f64,
        steps: usize,
    },
    Log {
        min: f64,
        max: f64,
        steps: usize,
    },
    /// R10 preferred numbers within `[min, max]`.
    Renard {
        min: f64,
        max: f64,
    },
    Values(Vec<f64>),
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spacing::Linear { min, max, steps } => write!(f, "lin:{min}:{max}:{steps}"),
            Spacing::Log { min, max, steps } => write!(f, "log:{min}:{max}:{steps}"),
            Spacing::Renard { min, max } => write!(f, "r10:{min}:{max}"),
            Spacing::Values(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "values:{}", parts.join(";"))
            }
        }
    }
}

/// A named sweep axis with its resolved coordinate values.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    name: String,
    spacing: Spacing,
    values: Vec<f64>,
}

impl Axis {
    pub fn new(name: impl Into<String>, spacing: Spacing) -> Result<Self> {
        let name = name.into();
        let values = resolve(&name, &spacing)?;
        Ok(Self {
            name,
            spacing,
            values,
        })
    }

    pub fn linear(name: impl Into<String>, min: f64, max: f64, steps: usize) -> Result<Self> {
        Self::new(name, Spacing::Linear { min, max, steps })
    }

    pub fn log(name: impl Into<String>, min: f64, max: f64, steps: usize) -> Result<Self> {
        Self::new(name, Spacing::Log { min, max, steps })
    }

    pub fn renard(name: impl Into<String>, min: f64, max: f64) -> Result<Self> {
        Self::new(name, Spacing::Renard { min, max })
    }

    pub fn values(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        Self::new(name, Spacing::Values(values))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spacing(&self) -> &Spacing {
        &self.spacing
    }

    pub fn points(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn require(&self, ok: impl Fn(f64) -> bool, expected: &str) -> Result<()> {
        match self.values.iter().find(|&&v| !ok(v)) {
            Some(v) => Err(ModelError::InvalidAxis(format!(
                "axis `{}` value {v} out of range: expected {expected}",
                self.name
            ))),
            None => Ok(()),
        }
    }
}

fn axis_error(name: &str, msg: &str) -> ModelError {
    ModelError::InvalidAxis(format!("axis `{name}`: {msg}"))
}

fn resolve(name: &str, spacing: &Spacing) -> Result<Vec<f64>> {
    let bounds = |min: f64, max: f64| -> Result<()> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(axis_error(name, "bounds must be finite"));
        }
        if min >= max {
            return Err(axis_error(name, "min must be below max"));
        }
        Ok(())
    };
    match *spacing {
        Spacing::Linear { min, max, steps } => {
            bounds(min, max)?;
            if steps < 2 {
                return Err(axis_error(name, "at least 2 steps required"));
            }
            let last = (steps - 1) as f64;
            Ok((0..steps)
                .map(|i| match i {
                    0 => min,
                    i if i == steps - 1 => max,
                    i => min + (max - min) * (i as f64 / last),
                })
                .collect())
        }
        Spacing::Log { min, max, steps } => {
            bounds(min, max)?;
            if min <= 0.0 {
                return Err(axis_error(name, "log spacing needs positive bounds"));
            }
            if steps < 2 {
                return Err(axis_error(name, "at least 2 steps required"));
            }
            let (lo, hi) = (min.log10(), max.log10());
            let last = (steps - 1) as f64;
            Ok((0..steps)
                .map(|i| match i {
                    0 => min,
                    i if i == steps - 1 => max,
                    i => 10f64.powf(lo + (hi - lo) * (i as f64 / last)),
                })
                .collect())
        }
        Spacing::Renard { min, max } => {
            bounds(min, max)?;
            if min <= 0.0 {
                return Err(axis_error(
                    name,
                    "preferred-number spacing needs positive bounds",
                ));
            }
            let values = renard_values(min, max);
            if values.len() < 2 {
                return Err(axis_error(name, "fewer than 2 preferred numbers in range"));
            }
            Ok(values)
        }
        Spacing::Values(ref v) => {
            if v.is_empty() {
                return Err(axis_error(name, "empty value list"));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(axis_error(name, "values must be finite"));
            }
            Ok(v.clone())
        }
    }
}

// Exact powers of ten for both signs of the exponent: multiply by 10^k for
// k >= 0, divide by 10^-k otherwise, so decade points like 0.01 and 1000
// come out as the nearest doubles.
fn scale_decade(mantissa: f64, exponent: i32) -> f64 {
    if exponent >= 0 {
        mantissa * 10f64.powi(exponent)
    } else {
        mantissa / 10f64.powi(-exponent)
    }
}

fn renard_values(min: f64, max: f64) -> Vec<f64> {
    let first = min.log10().floor() as i32 - 1;
    let last = max.log10().ceil() as i32 + 1;
    (first..=last)
        .flat_map(|e| R10_MANTISSAS.iter().map(move |&m| scale_decade(m, e)))
        .filter(|&v| v >= min && v <= max)
        .collect()
}

/// A fully evaluated grid over one or more axes.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid<C> {
    axes: Vec<Axis>,
    fixed: Vec<(String, f64)>,
    cells: Vec<C>,
}

impl<C: Send> SweepGrid<C> {
    /// Evaluates `cell` at every coordinate tuple, in parallel.
    pub fn evaluate<F>(axes: Vec<Axis>, fixed: Vec<(String, f64)>, cell: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Result<C> + Sync,
    {
        let total = cell_count(&axes);
        let cells = (0..total)
            .into_par_iter()
            .map(|i| cell(&coordinates(&axes, i)))
            .collect::<Result<Vec<C>>>()?;
        Ok(Self { axes, fixed, cells })
    }
}

impl<C> SweepGrid<C> {
    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn fixed(&self) -> &[(String, f64)] {
        &self.fixed
    }

    pub fn cells(&self) -> &[C] {
        &self.cells
    }

    /// Coordinates of the cell at row-major position `index`.
    pub fn coordinates(&self, index: usize) -> Vec<f64> {
        coordinates(&self.axes, index)
    }
}

fn cell_count(axes: &[Axis]) -> usize {
    axes.iter().map(Axis::len).product()
}

fn coordinates(axes: &[Axis], mut index: usize) -> Vec<f64> {
    let mut coords = vec![0.0; axes.len()];
    for (slot, axis) in coords.iter_mut().zip(axes).rev() {
        *slot = axis.values[index % axis.len()];
        index /= axis.len();
    }
    coords
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Cell {
    pub delta: f64,
    pub benefit_over_cost: f64,
    pub profit_over_cost: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig2Cell {
    pub benefit: f64,
    pub cost: f64,
    pub transfer: f64,
    pub range: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CustomCell {
    pub benefit: f64,
    pub cost: f64,
    pub transfer: f64,
    pub delta: f64,
    pub report: CollusionReport,
}

/// Colluders' total profit normalized by cost: `Δ(B/C - 1)`.
pub fn normalized_profit(delta: f64, benefit_over_cost: f64) -> f64 {
    delta * (benefit_over_cost - 1.0)
}

pub fn default_fig1_deltas() -> Axis {
    Axis::values("delta", vec![0.001, 0.01, 0.1, 0.5, 1.0]).expect("valid default axis")
}

pub fn default_fig1_ratios() -> Axis {
    Axis::renard("benefit_over_cost", 1.0, 1e6).expect("valid default axis")
}

pub fn default_fig2_benefits() -> Axis {
    Axis::renard("benefit", 1e-2, 1e4).expect("valid default axis")
}

pub fn default_fig2_costs() -> Axis {
    Axis::renard("cost", 1e-2, 1e4).expect("valid default axis")
}

pub const DEFAULT_FIG2_TRANSFER: f64 = 1.0;

/// Profit over cost for every `(Δ, B/C)` pair; one line per `Δ`.
pub fn sweep_figure1(deltas: Axis, ratios: Axis) -> Result<SweepGrid<Fig1Cell>> {
    deltas.require(|d| d > 0.0 && d <= 1.0, "0 < delta <= 1")?;
    ratios.require(|r| r >= 0.0, "benefit_over_cost >= 0")?;
    SweepGrid::evaluate(vec![deltas, ratios], Vec::new(), |x| {
        Ok(Fig1Cell {
            delta: x[0],
            benefit_over_cost: x[1],
            profit_over_cost: normalized_profit(x[0], x[1]),
        })
    })
}

/// Width of the feasible influence interval over a `(B, C)` grid at fixed `t`.
pub fn sweep_figure2(benefits: Axis, costs: Axis, transfer: f64) -> Result<SweepGrid<Fig2Cell>> {
    benefits.require(|b| b > 0.0, "benefit > 0")?;
    costs.require(|c| c > 0.0, "cost > 0")?;
    if !(transfer.is_finite() && transfer > 0.0) {
        return Err(ModelError::OutOfRange {
            name: "transfer",
            value: transfer,
            expected: "t > 0",
        });
    }
    SweepGrid::evaluate(
        vec![benefits, costs],
        vec![("transfer".to_string(), transfer)],
        |x| {
            let params = GameParams::new(x[0], x[1], transfer)?;
            Ok(Fig2Cell {
                benefit: x[0],
                cost: x[1],
                transfer,
                range: feasibility_range(&params)?,
            })
        },
    )
}

/// Full collusion report over a `(B, C, t, Δ)` grid.
pub fn sweep_custom(
    benefits: Axis,
    costs: Axis,
    transfers: Axis,
    deltas: Axis,
) -> Result<SweepGrid<CustomCell>> {
    benefits.require(|b| b > 0.0, "benefit > 0")?;
    costs.require(|c| c >= 0.0, "cost >= 0")?;
    transfers.require(|t| t >= 0.0, "transfer >= 0")?;
    deltas.require(|d| (-1.0..=1.0).contains(&d), "-1 <= delta <= 1")?;
    SweepGrid::evaluate(vec![benefits, costs, transfers, deltas], Vec::new(), |x| {
        let params = GameParams::new(x[0], x[1], x[2])?;
        let delta = Delta::new(x[3])?;
        Ok(CustomCell {
            benefit: x[0],
            cost: x[1],
            transfer: x[2],
            delta: x[3],
            report: collusion_report(&params, delta),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_log_axes() {
        let a = Axis::linear("x", 0.0, 1.0, 5).unwrap();
        assert_eq!(a.points(), &[0.0, 0.25, 0.5, 0.75, 1.0]);
        let a = Axis::log("x", 1.0, 1000.0, 4).unwrap();
        assert_eq!(a.points()[0], 1.0);
        assert_eq!(a.points()[3], 1000.0);
        assert!((a.points()[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_axes_rejected() {
        assert!(Axis::linear("x", 0.0, 1.0, 1).is_err());
        assert!(Axis::linear("x", 1.0, 1.0, 3).is_err());
        assert!(Axis::log("x", 0.0, 1.0, 3).is_err());
        assert!(Axis::values("x", vec![]).is_err());
        assert!(Axis::values("x", vec![f64::NAN]).is_err());
        assert!(Axis::renard("x", 1.1, 1.2).is_err());
    }

    #[test]
    fn renard_axis_hits_decades_exactly() {
        let a = default_fig2_costs();
        assert_eq!(a.len(), 61);
        assert_eq!(a.points()[0], 0.01);
        assert_eq!(*a.points().last().unwrap(), 1e4);
        for v in [0.01, 0.5, 1.0, 2.0, 1000.0] {
            assert!(a.points().contains(&v), "{v} missing");
        }
        assert!(a.points().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn row_major_coordinates() {
        let axes = vec![
            Axis::values("a", vec![1.0, 2.0]).unwrap(),
            Axis::values("b", vec![10.0, 20.0, 30.0]).unwrap(),
        ];
        let g = SweepGrid::evaluate(axes, Vec::new(), |x| Ok(x[0] * 100.0 + x[1])).unwrap();
        assert_eq!(g.cells(), &[110.0, 120.0, 130.0, 210.0, 220.0, 230.0]);
        assert_eq!(g.coordinates(4), vec![2.0, 20.0]);
    }

    #[test]
    fn figure1_spot_values() {
        let g = sweep_figure1(default_fig1_deltas(), default_fig1_ratios()).unwrap();
        assert_eq!(g.cells().len(), 5 * 61);
        let find = |d: f64, r: f64| {
            g.cells()
                .iter()
                .find(|c| c.delta == d && c.benefit_over_cost == r)
                .copied()
                .unwrap()
        };
        assert_eq!(find(1.0, 1000.0).profit_over_cost, 999.0);
        assert!((find(0.001, 1e4).profit_over_cost - 9.999).abs() < 1e-9);
        assert_eq!(find(0.5, 1.0).profit_over_cost, 0.0);
    }

    #[test]
    fn figure1_rejects_bad_delta() {
        let bad = Axis::values("delta", vec![0.0, 0.5]).unwrap();
        assert!(sweep_figure1(bad, default_fig1_ratios()).is_err());
    }

    #[test]
    fn figure2_spot_values() {
        let g = sweep_figure2(default_fig2_benefits(), default_fig2_costs(), 1.0).unwrap();
        let find = |b: f64, c: f64| {
            g.cells()
                .iter()
                .find(|x| x.benefit == b && x.cost == c)
                .unwrap()
                .range
        };
        assert_eq!(find(1000.0, 0.5), 0.999);
        assert_eq!(find(1.0, 1.0), 0.0);
        assert!(sweep_figure2(default_fig2_benefits(), default_fig2_costs(), 0.0).is_err());
    }

    #[test]
    fn custom_sweep_covers_all_cells() {
        let g = sweep_custom(
            Axis::values("benefit", vec![10.0]).unwrap(),
            Axis::values("cost", vec![2.0]).unwrap(),
            Axis::values("transfer", vec![1.0]).unwrap(),
            Axis::linear("delta", 0.0, 1.0, 11).unwrap(),
        )
        .unwrap();
        assert_eq!(g.cells().len(), 11);
        let feasible: Vec<f64> = g
            .cells()
            .iter()
            .filter(|c| c.report.feasible)
            .map(|c| c.delta)
            .collect();
        assert_eq!(feasible.len(), 3);
        assert!(feasible.iter().all(|&d| d > 0.1 && d < 0.5));
    }
}
