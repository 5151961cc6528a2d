//! Experiment harness: feasibility matrices and payload sweeps.

mod scenario;
mod sweep;

pub use scenario::{
    load_scenario, parse_scenario, EconomicsSection, Probabilities, Scenario, ScenarioError,
    ScenarioFile, SweepSection, TaskSection,
};
pub use sweep::{format_float, sweep_data_size, write_csv, RowValues, SweepRow};

use crate::contract::{
    check_feasibility, design_contract, ContractDesign, FeasibilityReport, IC_TOLERANCE,
};
use crate::error::Result;

/// Utilities of every type under every item of the designed contract.
#[derive(Debug, Clone)]
pub struct FeasibilityMatrix {
    pub design: ContractDesign,
    pub report: FeasibilityReport,
}

impl FeasibilityMatrix {
    pub fn utilities(&self) -> &[Vec<f64>] {
        &self.report.ic_matrix
    }

    /// Every own-item utility is non-negative.
    pub fn ir_holds(&self) -> bool {
        self.report
            .own_utilities()
            .iter()
            .all(|&u| u >= -IC_TOLERANCE)
    }

    /// The diagonal entry is maximal in every row.
    pub fn ic_holds(&self) -> bool {
        self.report
            .ic_matrix
            .iter()
            .enumerate()
            .all(|(n, row)| row.iter().all(|&u| row[n] >= u - IC_TOLERANCE))
    }

    /// Own-item utility does not decrease with type.
    pub fn own_utilities_nondecreasing(&self) -> bool {
        self.report
            .own_utilities()
            .windows(2)
            .all(|w| w[1] >= w[0] - IC_TOLERANCE)
    }
}

/// Designs the contract for the scenario's payload and evaluates every
/// (type, item) pairing.
pub fn run_feasibility_matrix(scenario: &Scenario) -> Result<FeasibilityMatrix> {
    let design = design_contract(&scenario.grid, &scenario.spectrum, &scenario.params)?;
    let report = check_feasibility(&design.contract, &scenario.spectrum)?;
    Ok(FeasibilityMatrix { design, report })
}
