//! Freshness-aware incentive contracts for bandwidth providers in vehicle
//! twin migration.
//!
//! A migration task's freshness is measured by its age of migration task
//! (AoMT), `D / rate(b) + T`. The task publisher (MSP) buys bandwidth from
//! providers (MRPs) whose efficiency type is private, and offers a menu of
//! bandwidth-reward items that is individually rational and incentive
//! compatible. [`contract::design_contract`] computes that menu;
//! [`baselines`] holds the complete-information and social-welfare
//! comparisons; [`experiments`] loads scenario files and runs sweeps.

pub mod baselines;
pub mod channel;
pub mod contract;
pub mod economics;
mod error;
pub mod experiments;

pub use error::{Error, Result};
