use std::io::Write;

use rayon::prelude::*;

use crate::baselines::{run_mechanism, Mechanism};
use crate::error::Error;
use crate::experiments::Scenario;

#[derive(Debug, Clone, PartialEq)]
pub struct RowValues {
    pub bandwidths: Vec<f64>,
    pub rewards: Vec<f64>,
    pub msp_utility: f64,
    pub mrp_sum_utility: f64,
}

/// One (payload, mechanism) point. A solver failure is kept on the row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub data_bits: f64,
    pub mechanism: Mechanism,
    pub values: Result<RowValues, Error>,
}

fn solve_row(scenario: &Scenario, mechanism: Mechanism, data_bits: f64) -> SweepRow {
    let values = scenario.params_for(data_bits).and_then(|params| {
        let outcome = run_mechanism(mechanism, &scenario.grid, &scenario.spectrum, &params)?;
        Ok(RowValues {
            bandwidths: outcome.contract.bandwidths(),
            rewards: outcome.contract.rewards(),
            msp_utility: outcome.msp_utility,
            mrp_sum_utility: outcome.mrp_sum_utility(&scenario.spectrum),
        })
    });
    SweepRow {
        data_bits,
        mechanism,
        values,
    }
}

/// Solves every (mechanism, payload) pair of the scenario's sweep.
///
/// Rows are ordered by mechanism (asymmetric, complete-info, social-welfare)
/// and then by the sweep's payload order, whatever order they were solved in.
pub fn sweep_data_size(scenario: &Scenario, mechanisms: &[Mechanism]) -> Vec<SweepRow> {
    let mut mechanisms = mechanisms.to_vec();
    mechanisms.sort();
    mechanisms.dedup();
    let jobs: Vec<(Mechanism, f64)> = mechanisms
        .iter()
        .flat_map(|&m| scenario.sweep.iter().map(move |&d| (m, d)))
        .collect();
    jobs.par_iter()
        .map(|&(m, d)| solve_row(scenario, m, d))
        .collect()
}

/// Twelve significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

/// Writes rows as CSV. Failed rows leave numeric cells empty and carry the
/// error in the `status` column.
pub fn write_csv<W: Write>(scenario: &Scenario, rows: &[SweepRow], out: W) -> csv::Result<()> {
    let n = scenario.num_types();
    let mut writer = csv::Writer::from_writer(out);

    let mut header = vec![
        "scenario_hash".to_string(),
        "mechanism".into(),
        "data_bits".into(),
    ];
    header.extend((1..=n).map(|i| format!("b_{i}")));
    header.extend((1..=n).map(|i| format!("R_{i}")));
    header.extend([
        "msp_utility".into(),
        "mrp_sum_utility".into(),
        "status".into(),
    ]);
    writer.write_record(&header)?;

    for row in rows {
        let mut record = vec![
            scenario.hash.clone(),
            row.mechanism.to_string(),
            format_float(row.data_bits),
        ];
        match &row.values {
            Ok(v) => {
                record.extend(v.bandwidths.iter().map(|&x| format_float(x)));
                record.extend(v.rewards.iter().map(|&x| format_float(x)));
                record.push(format_float(v.msp_utility));
                record.push(format_float(v.mrp_sum_utility));
                record.push("ok".into());
            }
            Err(e) => {
                record.extend(std::iter::repeat_n(String::new(), 2 * n + 2));
                record.push(e.to_string());
            }
        }
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}
