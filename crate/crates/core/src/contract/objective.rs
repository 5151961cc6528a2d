//! Per-type objectives tabulated over the bandwidth grid.

use std::ops::RangeInclusive;

use crate::contract::grid::GridSpec;
use crate::economics::{e_coefficients, msp_satisfaction, ScenarioParams, TypeSpectrum};
use crate::error::{Error, Result};

/// Separable objective `M (w_n S(b) - c_n b^2)` evaluated on a grid.
///
/// Satisfaction does not depend on the type, so it is computed once per grid
/// point. Points whose AoMT exceeds the tolerance hold `-inf`.
#[derive(Debug, Clone)]
pub struct ObjectiveTable {
    grid: GridSpec,
    points: Vec<f64>,
    satisfaction: Vec<f64>,
    population: f64,
    weights: Vec<f64>,
    costs: Vec<f64>,
}

/// Satisfaction, or `-inf` when the bandwidth is inadmissible.
pub(crate) fn satisfaction_or_sentinel(
    bandwidth_hz: f64,
    scenario: &ScenarioParams,
) -> Result<f64> {
    match msp_satisfaction(bandwidth_hz, scenario) {
        Ok(s) => Ok(s),
        Err(Error::InfeasibleBandwidth { .. }) => Ok(f64::NEG_INFINITY),
        Err(e) => Err(e),
    }
}

impl ObjectiveTable {
    fn build(
        grid: &GridSpec,
        spectrum: &TypeSpectrum,
        scenario: &ScenarioParams,
        costs: Vec<f64>,
    ) -> Result<Self> {
        grid.validate()?;
        let points: Vec<f64> = grid.points().collect();
        let satisfaction = points
            .iter()
            .map(|&b| satisfaction_or_sentinel(b, scenario))
            .collect::<Result<Vec<_>>>()?;
        Ok(ObjectiveTable {
            grid: *grid,
            points,
            satisfaction,
            population: f64::from(spectrum.population()),
            weights: spectrum.probabilities().collect(),
            costs,
        })
    }

    /// The MSP objective after eliminating rewards: `M (Q_n S - e_n b^2)`.
    pub fn information_rent(
        grid: &GridSpec,
        spectrum: &TypeSpectrum,
        scenario: &ScenarioParams,
    ) -> Result<Self> {
        Self::build(grid, spectrum, scenario, e_coefficients(spectrum))
    }

    /// Per-type social welfare `M Q_n (S - b^2 / theta_n)`.
    pub fn welfare(
        grid: &GridSpec,
        spectrum: &TypeSpectrum,
        scenario: &ScenarioParams,
    ) -> Result<Self> {
        let costs = spectrum
            .types()
            .iter()
            .map(|t| t.probability / t.theta)
            .collect();
        Self::build(grid, spectrum, scenario, costs)
    }

    pub fn num_types(&self) -> usize {
        self.weights.len()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn value(&self, type_index: usize, point_index: usize) -> f64 {
        let s = self.satisfaction[point_index];
        if s == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        let b = self.points[point_index];
        self.population * (self.weights[type_index] * s - self.costs[type_index] * b * b)
    }

    /// Grid index maximizing the summed objective of a run of types.
    /// Ties resolve to the smaller bandwidth; `None` if no point is admissible.
    pub fn group_argmax(&self, types: RangeInclusive<usize>) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for k in 0..self.points.len() {
            if self.satisfaction[k] == f64::NEG_INFINITY {
                continue;
            }
            let v: f64 = types.clone().map(|n| self.value(n, k)).sum();
            if best.is_none_or(|(_, bv)| v > bv) {
                best = Some((k, v));
            }
        }
        best.map(|(k, _)| k)
    }

    /// Independent argmax for every type.
    pub fn argmax_per_type(&self) -> Result<Vec<f64>> {
        (0..self.num_types())
            .map(|n| {
                self.group_argmax(n..=n)
                    .map(|k| self.points[k])
                    .ok_or(Error::NoAdmissibleBandwidth { type_index: n + 1 })
            })
            .collect()
    }

    /// Sum of per-type objectives for a bandwidth vector drawn from the grid.
    pub fn total(&self, bandwidths: &[f64]) -> Result<f64> {
        if bandwidths.len() != self.num_types() {
            return Err(Error::LengthMismatch {
                expected: self.num_types(),
                actual: bandwidths.len(),
            });
        }
        bandwidths
            .iter()
            .enumerate()
            .map(|(n, &b)| self.value_at(n, b))
            .sum()
    }

    /// Objective at a bandwidth that lies on the grid.
    pub fn value_at(&self, type_index: usize, bandwidth_hz: f64) -> Result<f64> {
        let k = ((bandwidth_hz - self.grid.b_min) / self.grid.step).round();
        if k >= 0.0 && (k as usize) < self.points.len() {
            let k = k as usize;
            if (self.points[k] - bandwidth_hz).abs() <= 1e-9 * bandwidth_hz.abs() {
                return Ok(self.value(type_index, k));
            }
        }
        Err(Error::invalid(
            "bandwidth_hz",
            format!("{bandwidth_hz} Hz is not a grid point"),
        ))
    }
}

/// `M (Q_n S(b) - e_n b^2)` for type `type_index` (zero-based), or `-inf`
/// when `b` violates the AoMT tolerance.
pub fn per_type_objective(
    bandwidth_hz: f64,
    type_index: usize,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<f64> {
    let ty = spectrum
        .types()
        .get(type_index)
        .ok_or(Error::LengthMismatch {
            expected: spectrum.len(),
            actual: type_index + 1,
        })?;
    let s = satisfaction_or_sentinel(bandwidth_hz, scenario)?;
    if s == f64::NEG_INFINITY {
        return Ok(f64::NEG_INFINITY);
    }
    let e = e_coefficients(spectrum)[type_index];
    let m = f64::from(spectrum.population());
    Ok(m * (ty.probability * s - e * bandwidth_hz * bandwidth_hz))
}

/// Per-type grid maximizers of the MSP objective, before any monotonicity repair.
pub fn grid_search_bandwidth(
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<Vec<f64>> {
    ObjectiveTable::information_rent(grid, spectrum, scenario)?.argmax_per_type()
}
