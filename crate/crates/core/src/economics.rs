//! Agent model: MRP types and utility, MSP satisfaction and expected utility.

use crate::channel::{aomt, Link, MigrationTask};
use crate::error::{Error, Result};

/// Tolerance on `sum(Q_n) == 1`.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-9;

/// One MRP type: efficiency `theta = G^2 / a` and its population share `Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrpType {
    pub theta: f64,
    pub probability: f64,
}

impl MrpType {
    pub fn new(theta: f64, probability: f64) -> Result<Self> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(Error::invalid("theta", "must be positive and finite"));
        }
        if !(0.0..=1.0).contains(&probability) {
            return Err(Error::invalid("probability", "must lie in [0, 1]"));
        }
        Ok(MrpType { theta, probability })
    }
}

/// The type distribution the MSP designs against.
///
/// Types are sorted non-decreasing by `theta` and the probabilities sum to
/// one. Probabilities that miss the sum are rejected, never renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeSpectrum {
    types: Vec<MrpType>,
    population: u32,
}

impl TypeSpectrum {
    pub fn new(types: Vec<MrpType>, population: u32) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::invalid("types", "at least one type is required"));
        }
        if population == 0 {
            return Err(Error::invalid("population", "must be at least 1"));
        }
        if let Some(i) = types.windows(2).position(|w| w[1].theta < w[0].theta) {
            return Err(Error::invalid(
                "theta",
                format!(
                    "types must be sorted non-decreasing (type {} > type {})",
                    i + 1,
                    i + 2
                ),
            ));
        }
        let sum: f64 = types.iter().map(|t| t.probability).sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::invalid(
                "probabilities",
                format!("sum of Q_n must equal 1 (got {sum})"),
            ));
        }
        Ok(TypeSpectrum { types, population })
    }

    /// Builds a spectrum from parallel theta / probability lists.
    pub fn from_parts(thetas: &[f64], probabilities: &[f64], population: u32) -> Result<Self> {
        if thetas.len() != probabilities.len() {
            return Err(Error::LengthMismatch {
                expected: thetas.len(),
                actual: probabilities.len(),
            });
        }
        let types = thetas
            .iter()
            .zip(probabilities)
            .map(|(&t, &q)| MrpType::new(t, q))
            .collect::<Result<Vec<_>>>()?;
        TypeSpectrum::new(types, population)
    }

    /// Equal probability `1/N` for every type.
    pub fn uniform(thetas: &[f64], population: u32) -> Result<Self> {
        let q = 1.0 / thetas.len().max(1) as f64;
        TypeSpectrum::from_parts(thetas, &vec![q; thetas.len()], population)
    }

    pub fn types(&self) -> &[MrpType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn population(&self) -> u32 {
        self.population
    }

    pub fn thetas(&self) -> impl Iterator<Item = f64> + '_ {
        self.types.iter().map(|t| t.theta)
    }

    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.types.iter().map(|t| t.probability)
    }

    pub fn with_population(&self, population: u32) -> Result<Self> {
        TypeSpectrum::new(self.types.clone(), population)
    }
}

/// Task, link and MSP profit scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    pub task: MigrationTask,
    pub link: Link,
    /// Unit profit per unit of log-satisfaction.
    pub beta: f64,
}

impl ScenarioParams {
    /// `beta = 0` is accepted as a degenerate zero-profit case; scenario
    /// files require a strictly positive value.
    pub fn new(task: MigrationTask, link: Link, beta: f64) -> Result<Self> {
        task.validate()?;
        if !(beta >= 0.0 && beta.is_finite()) {
            return Err(Error::invalid("beta", "must be non-negative and finite"));
        }
        Ok(ScenarioParams { task, link, beta })
    }

    pub fn with_data_bits(&self, data_bits: f64) -> Result<Self> {
        ScenarioParams::new(self.task.with_data_bits(data_bits)?, self.link, self.beta)
    }
}

/// A bandwidth-reward pair offered to one type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractItem {
    pub bandwidth_hz: f64,
    pub reward: f64,
}

impl ContractItem {
    pub fn new(bandwidth_hz: f64, reward: f64) -> Result<Self> {
        if !(bandwidth_hz >= 0.0 && bandwidth_hz.is_finite()) {
            return Err(Error::invalid(
                "bandwidth_hz",
                "must be non-negative and finite",
            ));
        }
        if !(reward >= 0.0 && reward.is_finite()) {
            return Err(Error::invalid("reward", "must be non-negative and finite"));
        }
        Ok(ContractItem {
            bandwidth_hz,
            reward,
        })
    }
}

/// A menu of items, one per type in ascending type order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Contract {
    pub items: Vec<ContractItem>,
}

impl Contract {
    pub fn from_parts(bandwidths: &[f64], rewards: &[f64]) -> Result<Self> {
        if bandwidths.len() != rewards.len() {
            return Err(Error::LengthMismatch {
                expected: bandwidths.len(),
                actual: rewards.len(),
            });
        }
        let items = bandwidths
            .iter()
            .zip(rewards)
            .map(|(&b, &r)| ContractItem::new(b, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(Contract { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn bandwidths(&self) -> Vec<f64> {
        self.items.iter().map(|i| i.bandwidth_hz).collect()
    }

    pub fn rewards(&self) -> Vec<f64> {
        self.items.iter().map(|i| i.reward).collect()
    }
}

/// Type value `G^2 / a`.
pub fn mrp_type_from_profile(gain: f64, cost_coeff: f64) -> Result<f64> {
    if !(gain > 0.0 && gain.is_finite()) {
        return Err(Error::invalid("gain", "must be positive and finite"));
    }
    if !(cost_coeff > 0.0 && cost_coeff.is_finite()) {
        return Err(Error::invalid("cost_coeff", "must be positive and finite"));
    }
    Ok(gain * gain / cost_coeff)
}

/// Type value with the gain expressed in a rescaled unit, `(s G)^2 / a`.
///
/// Physical gains and cost coefficients put `b^2 / theta` many orders of
/// magnitude above the satisfaction term when bandwidth is in Hz; `gain_scale`
/// moves the type onto the economic scale of the scenario.
pub fn normalized_type(gain: f64, cost_coeff: f64, gain_scale: f64) -> Result<f64> {
    if !(gain_scale > 0.0 && gain_scale.is_finite()) {
        return Err(Error::invalid("gain_scale", "must be positive and finite"));
    }
    mrp_type_from_profile(gain * gain_scale, cost_coeff)
}

/// MRP utility `R - b^2 / theta`.
pub fn mrp_utility(item: &ContractItem, theta: f64) -> Result<f64> {
    if theta.is_nan() || theta <= 0.0 {
        return Err(Error::invalid("theta", "must be positive"));
    }
    Ok(item.reward - item.bandwidth_hz * item.bandwidth_hz / theta)
}

/// MSP satisfaction `beta ln(K - A(b) + 1)`.
///
/// Bandwidths whose AoMT exceeds `K` are reported as infeasible.
pub fn msp_satisfaction(bandwidth_hz: f64, scenario: &ScenarioParams) -> Result<f64> {
    let age = aomt(bandwidth_hz, &scenario.task, &scenario.link)?;
    let slack = scenario.task.max_aomt_s - age;
    if slack < 0.0 {
        return Err(Error::InfeasibleBandwidth {
            bandwidth_hz,
            aomt_s: age,
            max_aomt_s: scenario.task.max_aomt_s,
        });
    }
    Ok(scenario.beta * slack.ln_1p())
}

/// Expected MSP utility `sum_n M Q_n (S_n - R_n)`.
pub fn msp_expected_utility(
    contract: &Contract,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<f64> {
    if contract.len() != spectrum.len() {
        return Err(Error::LengthMismatch {
            expected: spectrum.len(),
            actual: contract.len(),
        });
    }
    let m = f64::from(spectrum.population());
    let mut total = 0.0;
    for (item, ty) in contract.items.iter().zip(spectrum.types()) {
        let s = msp_satisfaction(item.bandwidth_hz, scenario)?;
        total += m * ty.probability * (s - item.reward);
    }
    Ok(total)
}

/// Virtual cost coefficients `e_n` of the reward-eliminated MSP objective
/// `sum_n M (Q_n S_n - e_n b_n^2)`.
pub fn e_coefficients(spectrum: &TypeSpectrum) -> Vec<f64> {
    let types = spectrum.types();
    let n = types.len();
    let mut out = vec![0.0; n];
    // Tail mass sum_{j>i} Q_j, accumulated from the top type down.
    let mut tail = 0.0;
    for i in (0..n).rev() {
        let t = &types[i];
        out[i] = if i + 1 == n {
            t.probability / t.theta
        } else {
            t.probability / t.theta + (1.0 / t.theta - 1.0 / types[i + 1].theta) * tail
        };
        tail += t.probability;
    }
    out
}
