use crate::economics::TypeSpectrum;
use crate::error::{Error, Result};

/// Cheapest rewards that make a monotone bandwidth vector IR and IC.
///
/// The lowest type's IR constraint binds (`R_1 = b_1^2 / theta_1`) and every
/// local downward IC constraint binds, giving the recursion
/// `R_n = R_{n-1} + (b_n^2 - b_{n-1}^2) / theta_n`.
pub fn optimal_rewards(bandwidths: &[f64], spectrum: &TypeSpectrum) -> Result<Vec<f64>> {
    if bandwidths.len() != spectrum.len() {
        return Err(Error::LengthMismatch {
            expected: spectrum.len(),
            actual: bandwidths.len(),
        });
    }
    if let Some(b) = bandwidths.iter().find(|b| !(**b >= 0.0 && b.is_finite())) {
        return Err(Error::invalid(
            "bandwidth_hz",
            format!("{b} is not a non-negative finite bandwidth"),
        ));
    }
    if let Some(i) = bandwidths.windows(2).position(|w| w[1] < w[0]) {
        return Err(Error::NotMonotone { index: i + 2 });
    }

    let mut rewards = Vec::with_capacity(bandwidths.len());
    let mut prev: Option<(f64, f64)> = None;
    for (&b, theta) in bandwidths.iter().zip(spectrum.thetas()) {
        let r = match prev {
            None => b * b / theta,
            Some((prev_b, prev_r)) => prev_r + (b * b - prev_b * prev_b) / theta,
        };
        rewards.push(r);
        prev = Some((b, r));
    }
    Ok(rewards)
}
