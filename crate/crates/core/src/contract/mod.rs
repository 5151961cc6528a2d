//! Optimal contract design under information asymmetry.
//!
//! The solver eliminates rewards through the binding IR/IC structure, which
//! leaves a separable objective in the bandwidths alone. Each type's bandwidth
//! is found by a linear grid scan; if the resulting vector is not monotone in
//! type, adjacent types are bunched until it is. Rewards are then rebuilt from
//! the bandwidths.
//!
//! The scan touches every grid point once per type, so the cost is
//! `O(N * (b_max - b_min) / step)` plus ironing.

mod feasibility;
mod grid;
mod ironing;
mod objective;
mod rewards;

pub use feasibility::{
    check_feasibility, ConstraintKind, FeasibilityReport, Violation, IC_TOLERANCE,
};
pub use grid::{GridSpec, DEFAULT_B_MAX, DEFAULT_B_MIN, DEFAULT_STEP};
pub use ironing::{bunching_and_ironing, iron_with};
pub use objective::{grid_search_bandwidth, per_type_objective, ObjectiveTable};
pub use rewards::optimal_rewards;

use crate::economics::{msp_expected_utility, Contract, ScenarioParams, TypeSpectrum};
use crate::error::Result;

/// Output of [`design_contract`].
#[derive(Debug, Clone, PartialEq)]
pub struct ContractDesign {
    /// Per-type grid maximizers before monotonicity repair.
    pub raw_bandwidths: Vec<f64>,
    pub contract: Contract,
    pub msp_utility: f64,
}

impl ContractDesign {
    pub fn was_ironed(&self) -> bool {
        self.raw_bandwidths != self.contract.bandwidths()
    }
}

/// Runs the full design: per-type grid search, ironing, reward construction.
pub fn design_contract(
    grid: &GridSpec,
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
) -> Result<ContractDesign> {
    let table = ObjectiveTable::information_rent(grid, spectrum, scenario)?;
    let raw_bandwidths = table.argmax_per_type()?;
    let bandwidths = iron_with(&raw_bandwidths, &table)?;
    let rewards = optimal_rewards(&bandwidths, spectrum)?;
    let contract = Contract::from_parts(&bandwidths, &rewards)?;
    let msp_utility = msp_expected_utility(&contract, spectrum, scenario)?;
    Ok(ContractDesign {
        raw_bandwidths,
        contract,
        msp_utility,
    })
}
