//! Physical-layer model for a single MSP-to-MRP migration link.
//!
//! Radio parameters arrive in logarithmic units ([`ChannelParams`]) and are
//! converted once into a linear [`Link`]. Everything downstream (rate, AoMT,
//! satisfaction) works on the linear form only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Converts a power level in dBm to watts.
pub fn dbm_to_watts(p_dbm: f64) -> f64 {
    10f64.powf((p_dbm - 30.0) / 10.0)
}

/// Radio parameters as they appear in a scenario description.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelParams {
    pub transmit_power_dbm: f64,
    /// Unit channel power gain at reference distance (linear).
    #[serde(default = "default_unit_gain")]
    pub unit_gain: f64,
    pub distance_m: f64,
    pub path_loss_exponent: f64,
    pub noise_density_dbm_hz: f64,
}

fn default_unit_gain() -> f64 {
    1.0
}

impl ChannelParams {
    pub fn validate(&self) -> Result<()> {
        if !self.transmit_power_dbm.is_finite() {
            return Err(Error::invalid("transmit_power_dbm", "must be finite"));
        }
        if !self.noise_density_dbm_hz.is_finite() {
            return Err(Error::invalid("noise_density_dbm_hz", "must be finite"));
        }
        if !(self.unit_gain > 0.0 && self.unit_gain.is_finite()) {
            return Err(Error::invalid("unit_gain", "must be positive and finite"));
        }
        if !(self.distance_m > 0.0 && self.distance_m.is_finite()) {
            return Err(Error::invalid("distance_m", "must be positive and finite"));
        }
        if !(self.path_loss_exponent >= 0.0 && self.path_loss_exponent.is_finite()) {
            return Err(Error::invalid("path_loss_exponent", "must be non-negative"));
        }
        Ok(())
    }

    /// Validates and converts to linear units.
    pub fn to_link(&self) -> Result<Link> {
        self.validate()?;
        Link::new(
            dbm_to_watts(self.transmit_power_dbm),
            channel_gain(self)?,
            dbm_to_watts(self.noise_density_dbm_hz),
        )
    }
}

/// Channel power gain `h0 * d^(-alpha)`.
pub fn channel_gain(params: &ChannelParams) -> Result<f64> {
    if params.distance_m.is_nan() || params.distance_m <= 0.0 {
        return Err(Error::invalid("distance_m", "must be positive"));
    }
    Ok(params.unit_gain * params.distance_m.powf(-params.path_loss_exponent))
}

/// A link in linear units: transmit power (W), channel gain, noise density (W/Hz).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    transmit_power_w: f64,
    gain: f64,
    noise_density_w_hz: f64,
}

impl Link {
    /// A zero transmit power is accepted and yields a zero rate.
    pub fn new(transmit_power_w: f64, gain: f64, noise_density_w_hz: f64) -> Result<Self> {
        if !(transmit_power_w >= 0.0 && transmit_power_w.is_finite()) {
            return Err(Error::invalid(
                "transmit_power_w",
                "must be non-negative and finite",
            ));
        }
        if !(gain > 0.0 && gain.is_finite()) {
            return Err(Error::invalid("gain", "must be positive and finite"));
        }
        if !(noise_density_w_hz > 0.0 && noise_density_w_hz.is_finite()) {
            return Err(Error::invalid(
                "noise_density_w_hz",
                "must be positive and finite",
            ));
        }
        Ok(Link {
            transmit_power_w,
            gain,
            noise_density_w_hz,
        })
    }

    pub fn transmit_power_w(&self) -> f64 {
        self.transmit_power_w
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    pub fn noise_density_w_hz(&self) -> f64 {
        self.noise_density_w_hz
    }

    /// Received SNR times bandwidth, `rho * G / N0`, in Hz.
    pub fn snr_bandwidth_product(&self) -> f64 {
        self.transmit_power_w * self.gain / self.noise_density_w_hz
    }

    /// Asymptotic rate as bandwidth grows without bound, `rho * G / (N0 ln 2)`.
    pub fn capacity_ceiling(&self) -> f64 {
        self.snr_bandwidth_product() / std::f64::consts::LN_2
    }
}

/// Achievable rate `b log2(1 + rho G / (N0 b))` in bit/s.
pub fn transmission_rate(bandwidth_hz: f64, link: &Link) -> Result<f64> {
    if !(bandwidth_hz > 0.0 && bandwidth_hz.is_finite()) {
        return Err(Error::invalid(
            "bandwidth_hz",
            "must be positive and finite",
        ));
    }
    let snr = link.snr_bandwidth_product() / bandwidth_hz;
    Ok(bandwidth_hz * (1.0 + snr).log2())
}

/// Payload and timing of one migration task.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MigrationTask {
    pub data_bits: f64,
    /// Collection plus processing time, `T = t_c + t_p`.
    pub fixed_time_s: f64,
    /// Maximum tolerated AoMT, `K`.
    pub max_aomt_s: f64,
}

impl MigrationTask {
    pub fn new(data_bits: f64, fixed_time_s: f64, max_aomt_s: f64) -> Result<Self> {
        let task = MigrationTask {
            data_bits,
            fixed_time_s,
            max_aomt_s,
        };
        task.validate()?;
        Ok(task)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.data_bits >= 0.0 && self.data_bits.is_finite()) {
            return Err(Error::invalid(
                "data_bits",
                "must be non-negative and finite",
            ));
        }
        if !(self.fixed_time_s > 0.0 && self.fixed_time_s.is_finite()) {
            return Err(Error::invalid(
                "fixed_time_s",
                "must be positive and finite",
            ));
        }
        if !(self.max_aomt_s > self.fixed_time_s && self.max_aomt_s.is_finite()) {
            return Err(Error::invalid(
                "max_aomt_s",
                "must be finite and exceed fixed_time_s",
            ));
        }
        Ok(())
    }

    pub fn with_data_bits(&self, data_bits: f64) -> Result<Self> {
        MigrationTask::new(data_bits, self.fixed_time_s, self.max_aomt_s)
    }
}

/// Age of migration task `D / rate(b) + T`, in seconds.
///
/// An empty payload always yields `T`, even on a link with zero rate.
pub fn aomt(bandwidth_hz: f64, task: &MigrationTask, link: &Link) -> Result<f64> {
    let rate = transmission_rate(bandwidth_hz, link)?;
    if task.data_bits == 0.0 {
        return Ok(task.fixed_time_s);
    }
    Ok(task.data_bits / rate + task.fixed_time_s)
}
