//! Scenario files: TOML with `[channel]`, `[task]`, `[economics]`, `[grid]`
//! and an optional `[sweep]` table. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::channel::{channel_gain, ChannelParams, MigrationTask};
use crate::contract::GridSpec;
use crate::economics::{normalized_type, ScenarioParams, TypeSpectrum};
use crate::error::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse scenario: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid scenario field {field}: {reason}")]
    Invalid { field: String, reason: String },
}

impl ScenarioError {
    fn invalid(field: impl Into<String>, reason: impl Into<String>) -> Self {
        ScenarioError::Invalid {
            field: field.into(),
            reason: reason.into(),
        }
    }

    fn within(section: &str) -> impl Fn(Error) -> ScenarioError + '_ {
        move |e| match e {
            Error::InvalidParameter { field, reason } => {
                ScenarioError::invalid(format!("{section}.{field}"), reason)
            }
            other => ScenarioError::invalid(section, other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSection {
    /// Payload used by `design` and `feasibility`, in bits.
    pub data_bits: f64,
    pub fixed_time_s: f64,
    pub max_aomt_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Probabilities {
    /// The literal string `"uniform"`.
    Named(String),
    Explicit(Vec<f64>),
}

impl Default for Probabilities {
    fn default() -> Self {
        Probabilities::Named("uniform".to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EconomicsSection {
    pub beta: f64,
    /// Number of MRPs, `M`.
    pub population: u32,
    /// Number of types, `N`. Required with `theta_base`; checked otherwise.
    pub types: Option<usize>,
    /// Explicit type values.
    pub theta: Option<Vec<f64>>,
    /// Generator `theta_n = theta_base * n`.
    pub theta_base: Option<f64>,
    /// Generator from bandwidth cost coefficients and the channel gain,
    /// `theta_n = (gain_scale * G)^2 / a_n`.
    pub cost_coefficients: Option<Vec<f64>>,
    pub gain_scale: Option<f64>,
    #[serde(default)]
    pub probabilities: Probabilities,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub data_bits: Vec<f64>,
}

/// The file exactly as written.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub channel: ChannelParams,
    pub task: TaskSection,
    pub economics: EconomicsSection,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default)]
    pub sweep: SweepSection,
}

/// A validated scenario, with every quantity in linear units.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub file: ScenarioFile,
    pub params: ScenarioParams,
    pub spectrum: TypeSpectrum,
    pub grid: GridSpec,
    pub sweep: Vec<f64>,
    /// First 16 hex digits of the SHA-256 of the file contents.
    pub hash: String,
}

impl Scenario {
    pub fn num_types(&self) -> usize {
        self.spectrum.len()
    }

    /// Same scenario with a different payload.
    pub fn params_for(&self, data_bits: f64) -> crate::error::Result<ScenarioParams> {
        self.params.with_data_bits(data_bits)
    }
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_scenario(&text)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = toml::from_str(text)?;
    let hash = hex::encode(Sha256::digest(text.as_bytes()))[..16].to_string();
    validate(file, hash)
}

fn validate(file: ScenarioFile, hash: String) -> Result<Scenario, ScenarioError> {
    let link = file
        .channel
        .to_link()
        .map_err(ScenarioError::within("channel"))?;
    let task = MigrationTask::new(
        file.task.data_bits,
        file.task.fixed_time_s,
        file.task.max_aomt_s,
    )
    .map_err(ScenarioError::within("task"))?;

    let econ = &file.economics;
    if !(econ.beta > 0.0 && econ.beta.is_finite()) {
        return Err(ScenarioError::invalid(
            "economics.beta",
            "unit profit must be positive",
        ));
    }
    let params =
        ScenarioParams::new(task, link, econ.beta).map_err(ScenarioError::within("economics"))?;

    let thetas = type_values(econ, &file.channel)?;
    let probabilities = match &econ.probabilities {
        Probabilities::Named(name) if name == "uniform" => {
            vec![1.0 / thetas.len() as f64; thetas.len()]
        }
        Probabilities::Named(other) => {
            return Err(ScenarioError::invalid(
                "economics.probabilities",
                format!("expected \"uniform\" or a list, got {other:?}"),
            ))
        }
        Probabilities::Explicit(list) => {
            if list.len() != thetas.len() {
                return Err(ScenarioError::invalid(
                    "economics.probabilities",
                    format!("{} entries for {} types", list.len(), thetas.len()),
                ));
            }
            list.clone()
        }
    };
    let spectrum = TypeSpectrum::from_parts(&thetas, &probabilities, econ.population)
        .map_err(ScenarioError::within("economics"))?;

    file.grid
        .validate()
        .map_err(ScenarioError::within("grid"))?;

    for (i, &d) in file.sweep.data_bits.iter().enumerate() {
        task.with_data_bits(d)
            .map_err(|e| ScenarioError::invalid(format!("sweep.data_bits[{i}]"), e.to_string()))?;
    }

    Ok(Scenario {
        params,
        spectrum,
        grid: file.grid,
        sweep: file.sweep.data_bits.clone(),
        hash,
        file,
    })
}

fn type_values(
    econ: &EconomicsSection,
    channel: &ChannelParams,
) -> Result<Vec<f64>, ScenarioError> {
    let given = [
        econ.theta.is_some(),
        econ.theta_base.is_some(),
        econ.cost_coefficients.is_some(),
    ]
    .iter()
    .filter(|x| **x)
    .count();
    if given != 1 {
        return Err(ScenarioError::invalid(
            "economics.theta",
            "exactly one of theta, theta_base or cost_coefficients must be given",
        ));
    }
    if econ.gain_scale.is_some() && econ.cost_coefficients.is_none() {
        return Err(ScenarioError::invalid(
            "economics.gain_scale",
            "only valid together with cost_coefficients",
        ));
    }

    let thetas = if let Some(list) = &econ.theta {
        list.clone()
    } else if let Some(base) = econ.theta_base {
        if !(base > 0.0 && base.is_finite()) {
            return Err(ScenarioError::invalid(
                "economics.theta_base",
                "must be positive",
            ));
        }
        let n = econ.types.ok_or_else(|| {
            ScenarioError::invalid("economics.types", "required when theta_base is used")
        })?;
        (1..=n).map(|k| base * k as f64).collect()
    } else {
        let costs = econ.cost_coefficients.as_deref().unwrap_or_default();
        let gain = channel_gain(channel).map_err(ScenarioError::within("channel"))?;
        let scale = econ.gain_scale.unwrap_or(1.0);
        costs
            .iter()
            .map(|&a| normalized_type(gain, a, scale))
            .collect::<Result<Vec<_>, _>>()
            .map_err(ScenarioError::within("economics"))?
    };

    if thetas.is_empty() {
        return Err(ScenarioError::invalid(
            "economics.types",
            "at least one type is required",
        ));
    }
    if let Some(n) = econ.types {
        if n != thetas.len() {
            return Err(ScenarioError::invalid(
                "economics.types",
                format!(
                    "declares {n} types but {} type values are given",
                    thetas.len()
                ),
            ));
        }
    }
    Ok(thetas)
}
