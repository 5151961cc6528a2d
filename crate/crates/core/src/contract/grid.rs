use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default lower bandwidth bound, in Hz.
pub const DEFAULT_B_MIN: f64 = 1e5;
/// Default upper bandwidth bound, in Hz.
pub const DEFAULT_B_MAX: f64 = 4e7;
/// Default grid step, in Hz.
pub const DEFAULT_STEP: f64 = 1e4;

/// Bandwidth search grid `b_min, b_min + step, ...` strictly below `b_max`.
///
/// The upper bound is exclusive: the scan visits `b_min + z * step` while
/// that value is below `b_max`, so a grid with `b_max = b_min + step` holds
/// exactly one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub b_min: f64,
    pub b_max: f64,
    pub step: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            b_min: DEFAULT_B_MIN,
            b_max: DEFAULT_B_MAX,
            step: DEFAULT_STEP,
        }
    }
}

impl GridSpec {
    pub fn new(b_min: f64, b_max: f64, step: f64) -> Result<Self> {
        let grid = GridSpec { b_min, b_max, step };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.b_min > 0.0 && self.b_min.is_finite()) {
            return Err(Error::invalid("b_min", "must be positive and finite"));
        }
        if !(self.b_max > self.b_min && self.b_max.is_finite()) {
            return Err(Error::invalid("b_max", "must be finite and exceed b_min"));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::invalid("step", "must be positive and finite"));
        }
        if (self.b_max - self.b_min) / self.step < 1.0 - 1e-12 {
            return Err(Error::invalid("step", "must not exceed b_max - b_min"));
        }
        Ok(())
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        let span = (self.b_max - self.b_min) / self.step;
        let nearest = span.round();
        // An exact multiple of the step lands on b_max, which is excluded.
        if (span - nearest).abs() <= 1e-9 * nearest.max(1.0) {
            nearest as usize
        } else {
            span.ceil() as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn point(&self, index: usize) -> f64 {
        self.b_min + self.step * index as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |z| self.point(z))
    }
}
