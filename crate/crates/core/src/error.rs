use thiserror::Error;

/// Errors produced by the channel model, the agent model and the solver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("bandwidth {bandwidth_hz} Hz is infeasible: AoMT {aomt_s} s exceeds tolerance {max_aomt_s} s")]
    InfeasibleBandwidth {
        bandwidth_hz: f64,
        aomt_s: f64,
        max_aomt_s: f64,
    },

    #[error("no admissible bandwidth on the grid for type {type_index}")]
    NoAdmissibleBandwidth { type_index: usize },

    #[error("bandwidths are not non-decreasing at type {index}")]
    NotMonotone { index: usize },

    #[error("length mismatch: expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    /// True for errors raised by the solver rather than by input validation.
    pub fn is_infeasibility(&self) -> bool {
        matches!(
            self,
            Error::InfeasibleBandwidth { .. } | Error::NoAdmissibleBandwidth { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
