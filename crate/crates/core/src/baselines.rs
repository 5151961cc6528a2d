//! Comparison mechanisms: complete information and social-welfare maximization.

use std::fmt;
use std::str::FromStr;

use crate::contract::{design_contract, iron_with, optimal_rewards, GridSpec, ObjectiveTable};
use crate::economics::{
    mrp_utility, msp_expected_utility, msp_satisfaction, Contract, ScenarioParams, TypeSpectrum,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mechanism {
    /// The screening contract designed under information asymmetry.
    Asymmetric,
    CompleteInfo,
    SocialWelfare,
}

impl Mechanism {
    pub const ALL: [Mechanism; 3] = [
        Mechanism::Asymmetric,
        Mechanism::CompleteInfo,
        Mechanism::SocialWelfare,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Mechanism::Asymmetric => "asymmetric",
            Mechanism::CompleteInfo => "complete-info",
            Mechanism::SocialWelfare => "social-welfare",
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mechanism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "asymmetric" => Ok(Mechanism::Asymmetric),
            "complete" | "complete-info" => Ok(Mechanism::CompleteInfo),
            "social" | "social-welfare" => Ok(Mechanism::SocialWelfare),
            other => Err(Error::invalid(
                "mechanism",
                format!("unknown mechanism {other:?} (expected asymmetric, complete or social)"),
            )),
        }
    }
}

/// A mechanism's contract with the utilities each side obtains from it.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub mechanism: Mechanism,
    pub contract: Contract,
    pub msp_utility: f64,
    /// Own-item utility of each type.
    pub mrp_utilities: Vec<f64>,
    /// `sum_n M Q_n (S_n - b_n^2 / theta_n)`, independent of the rewards.
    pub welfare: f64,
}

impl Outcome {
    fn evaluate(
        mechanism: Mechanism,
        contract: Contract,
        spectrum: &TypeSpectrum,
        scenario: &ScenarioParams,
    ) -> Result<Self> {
        let msp_utility = msp_expected_utility(&contract, spectrum, scenario)?;
        let mrp_utilities = contract
            .items
            .iter()
            .zip(spectrum.thetas())
            .map(|(item, theta)| mrp_utility(item, theta))
            .collect::<Result<Vec<_>>>()?;
        let welfare = social_welfare(&contract.bandwidths(), spectrum, scenario)?;
        Ok(Outcome {
            mechanism,
            contract,
            msp_utility,
            mrp_utilities,
            welfare,
        })
    }

    /// `M` times the expected own-item MRP utility, matching how the MSP
    /// utility aggregates over the population.
    pub fn mrp_sum_utility(&self, spectrum: &TypeSpectrum) -> f64 {
        let m = f64::from(spectrum.population());
        self.mrp_utilities
            .iter()
            .zip(spectrum.probabilities())
            .map(|(u, q)| m * q * u)
            .sum()
    }
}

/// Social welfare of an allocation, `sum_n M Q_n (S(b_n) - b_n^2 / theta_n)`.
pub fn social_welfare(
    bandwidths: &[f64],
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<f64> {
    if bandwidths.len() != spectrum.len() {
        return Err(Error::LengthMismatch {
            expected: spectrum.len(),
            actual: bandwidths.len(),
        });
    }
    let m = f64::from(spectrum.population());
    let mut total = 0.0;
    for (&b, ty) in bandwidths.iter().zip(spectrum.types()) {
        total += m * ty.probability * (msp_satisfaction(b, scenario)? - b * b / ty.theta);
    }
    Ok(total)
}

/// The screening contract wrapped as an [`Outcome`].
pub fn asymmetric_contract(
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<Outcome> {
    let design = design_contract(grid, spectrum, scenario)?;
    Outcome::evaluate(Mechanism::Asymmetric, design.contract, spectrum, scenario)
}

/// Contract when the MSP observes every type: each type gets its welfare
/// maximizing bandwidth and is paid exactly its cost.
pub fn complete_info_contract(
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<Outcome> {
    let table = ObjectiveTable::welfare(grid, spectrum, scenario)?;
    let bandwidths = table.argmax_per_type()?;
    let rewards: Vec<f64> = bandwidths
        .iter()
        .zip(spectrum.thetas())
        .map(|(b, theta)| b * b / theta)
        .collect();
    let contract = Contract::from_parts(&bandwidths, &rewards)?;
    Outcome::evaluate(Mechanism::CompleteInfo, contract, spectrum, scenario)
}

/// Welfare-maximizing allocation under asymmetric information, made
/// monotone if needed and paid with the binding IR/IC rewards.
pub fn social_welfare_contract(
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<Outcome> {
    let table = ObjectiveTable::welfare(grid, spectrum, scenario)?;
    let raw = table.argmax_per_type()?;
    let bandwidths = iron_with(&raw, &table)?;
    let rewards = optimal_rewards(&bandwidths, spectrum)?;
    let contract = Contract::from_parts(&bandwidths, &rewards)?;
    Outcome::evaluate(Mechanism::SocialWelfare, contract, spectrum, scenario)
}

/// Dispatches to the mechanism's solver.
pub fn run_mechanism(
    mechanism: Mechanism,
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<Outcome> {
    match mechanism {
        Mechanism::Asymmetric => asymmetric_contract(grid, spectrum, scenario),
        Mechanism::CompleteInfo => complete_info_contract(grid, spectrum, scenario),
        Mechanism::SocialWelfare => social_welfare_contract(grid, spectrum, scenario),
    }
}
