//! Monotonicity repair by bunching adjacent types.

use crate::contract::grid::GridSpec;
use crate::contract::objective::ObjectiveTable;
use crate::economics::{ScenarioParams, TypeSpectrum};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
struct Bunch {
    first: usize,
    last: usize,
    bandwidth: f64,
}

/// Irons `raw` against an arbitrary objective table.
///
/// Types are pushed left to right. Whenever the previous bunch sits above
/// the newest one, the two are pooled and the pool's common bandwidth is
/// reset to the grid argmax of its summed objective. Pooling repeats until
/// the stack is non-decreasing. Singleton bunches keep their raw value, so
/// an already monotone input is returned unchanged.
pub fn iron_with(raw: &[f64], table: &ObjectiveTable) -> Result<Vec<f64>> {
    if raw.len() != table.num_types() {
        return Err(Error::LengthMismatch {
            expected: table.num_types(),
            actual: raw.len(),
        });
    }
    let mut stack: Vec<Bunch> = Vec::with_capacity(raw.len());
    for (n, &b) in raw.iter().enumerate() {
        stack.push(Bunch {
            first: n,
            last: n,
            bandwidth: b,
        });
        while stack.len() >= 2
            && stack[stack.len() - 2].bandwidth > stack[stack.len() - 1].bandwidth
        {
            let top = stack.pop().expect("len >= 2");
            let below = stack.last_mut().expect("len >= 1");
            below.last = top.last;
            let k = table.group_argmax(below.first..=below.last).ok_or(
                Error::NoAdmissibleBandwidth {
                    type_index: below.first + 1,
                },
            )?;
            below.bandwidth = table.points()[k];
        }
    }

    let mut out = Vec::with_capacity(raw.len());
    for bunch in &stack {
        out.extend(std::iter::repeat_n(
            bunch.bandwidth,
            bunch.last - bunch.first + 1,
        ));
    }
    Ok(out)
}

/// Irons per-type maximizers of the MSP objective into a non-decreasing vector.
pub fn bunching_and_ironing(
    raw: &[f64],
    spectrum: &TypeSpectrum,
    scenario: &ScenarioParams,
    grid: &GridSpec,
) -> Result<Vec<f64>> {
    let table = ObjectiveTable::information_rent(grid, spectrum, scenario)?;
    iron_with(raw, &table)
}
