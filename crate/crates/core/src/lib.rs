//! Weather-dependent propagation and link-budget models for UAV links.
//!
//! The crate covers, for carriers from 2 GHz up to 900 GHz:
//!
//! * specific attenuation of rain (power law with polarization mixing),
//!   fog (double-Debye water permittivity) and dry snow;
//! * clear-air gaseous attenuation by line-by-line summation over the
//!   oxygen and water-vapour spectroscopic tables;
//! * multi-weather free-space path loss for line-of-sight links;
//! * the probabilistic LoS/NLoS air-to-ground channel, with and without
//!   weather;
//! * fixed-aperture antenna-array sizing, received power, noise and SNR;
//! * inversion of the air-to-ground model into coverage radius versus
//!   UAV altitude.
//!
//! Coefficient tables ship as CSV data files under `data/` and are embedded
//! into the library; see [`itu_data`].

pub mod a2g;
pub mod coverage;
pub mod error;
pub mod gas;
pub mod itu_data;
pub mod link_budget;
pub mod propagation;
pub mod quantities;
pub mod weather;

pub use error::{DataError, ModelError};
pub use quantities::{AttenuationRate, Db, Dbm, Frequency, Length};
