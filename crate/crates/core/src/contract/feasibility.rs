use crate::economics::{mrp_utility, Contract, TypeSpectrum};
use crate::error::{Error, Result};

/// Absolute slack allowed on IR and IC constraints.
pub const IC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    IndividualRationality,
    IncentiveCompatibility,
}

/// A violated constraint. Indices are zero-based; for IR `item_index`
/// equals `type_index`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub kind: ConstraintKind,
    pub type_index: usize,
    pub item_index: usize,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub ir_satisfied: Vec<bool>,
    /// `ic_matrix[n][j]` is the utility of a type-`n` MRP choosing item `j`.
    pub ic_matrix: Vec<Vec<f64>>,
    pub violations: Vec<Violation>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn own_utilities(&self) -> Vec<f64> {
        self.ic_matrix
            .iter()
            .enumerate()
            .map(|(n, row)| row[n])
            .collect()
    }

    /// Smallest IR or IC slack over all constraints.
    pub fn min_slack(&self) -> f64 {
        let mut min = f64::INFINITY;
        for (n, row) in self.ic_matrix.iter().enumerate() {
            min = min.min(row[n]);
            for (j, u) in row.iter().enumerate() {
                if j != n {
                    min = min.min(row[n] - u);
                }
            }
        }
        min
    }
}

/// Evaluates every IR constraint and all `N(N-1)` pairwise IC constraints.
pub fn check_feasibility(
    contract: &Contract,
    spectrum: &TypeSpectrum,
) -> Result<FeasibilityReport> {
    if contract.len() != spectrum.len() {
        return Err(Error::LengthMismatch {
            expected: spectrum.len(),
            actual: contract.len(),
        });
    }
    let ic_matrix = spectrum
        .thetas()
        .map(|theta| {
            contract
                .items
                .iter()
                .map(|item| mrp_utility(item, theta))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut ir_satisfied = Vec::with_capacity(spectrum.len());
    let mut violations = Vec::new();
    for (n, row) in ic_matrix.iter().enumerate() {
        let own = row[n];
        let ir_ok = own >= -IC_TOLERANCE;
        ir_satisfied.push(ir_ok);
        if !ir_ok {
            violations.push(Violation {
                kind: ConstraintKind::IndividualRationality,
                type_index: n,
                item_index: n,
                slack: own,
            });
        }
        for (j, &other) in row.iter().enumerate() {
            if j != n && own < other - IC_TOLERANCE {
                violations.push(Violation {
                    kind: ConstraintKind::IncentiveCompatibility,
                    type_index: n,
                    item_index: j,
                    slack: own - other,
                });
            }
        }
    }
    Ok(FeasibilityReport {
        ir_satisfied,
        ic_matrix,
        violations,
    })
}
