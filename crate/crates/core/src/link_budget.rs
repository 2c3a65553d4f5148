//! Fixed-aperture array sizing, received power, noise and SNR.

use crate::error::{ModelError, Result};
use crate::quantities::{Db, Dbm, Frequency, Length, SPEED_OF_LIGHT};

/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Receiver reference temperature for the noise floor, K.
pub const NOISE_TEMPERATURE_K: f64 = 298.15;

/// Default transmit power cap, dBm.
pub const DEFAULT_TX_POWER_CAP_DBM: f64 = 45.0;

/// Per-element gain of a patch element, dB.
pub const ELEMENT_GAIN_DB: f64 = 4.0;

/// Transceiver front-end and antenna-aperture parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RadioSystem {
    pub frequency: Frequency,
    pub tx_power: Dbm,
    pub tx_front_end_loss: Db,
    pub rx_front_end_loss: Db,
    pub noise_figure: Db,
    pub bandwidth_hz: f64,
    /// Side length of the square antenna aperture.
    pub aperture_side: Length,
    /// Effective dielectric constant of the element substrate.
    pub effective_dielectric: f64,
}

impl RadioSystem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        frequency: Frequency,
        tx_power: Dbm,
        tx_front_end_loss: Db,
        rx_front_end_loss: Db,
        noise_figure: Db,
        bandwidth_hz: f64,
        aperture_side: Length,
        effective_dielectric: f64,
    ) -> Result<Self> {
        Self::with_tx_power_cap(
            frequency,
            tx_power,
            tx_front_end_loss,
            rx_front_end_loss,
            noise_figure,
            bandwidth_hz,
            aperture_side,
            effective_dielectric,
            DEFAULT_TX_POWER_CAP_DBM,
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn with_tx_power_cap(
        frequency: Frequency,
        tx_power: Dbm,
        tx_front_end_loss: Db,
        rx_front_end_loss: Db,
        noise_figure: Db,
        bandwidth_hz: f64,
        aperture_side: Length,
        effective_dielectric: f64,
        tx_power_cap_dbm: f64,
    ) -> Result<Self> {
        if tx_power.dbm() > tx_power_cap_dbm {
            return Err(ModelError::Domain(format!(
                "transmit power {} exceeds the {tx_power_cap_dbm} dBm cap",
                tx_power
            )));
        }
        if tx_front_end_loss.db() < 0.0 || rx_front_end_loss.db() < 0.0 {
            return Err(ModelError::Domain("front-end losses must be >= 0 dB".into()));
        }
        if noise_figure.db() < 0.0 {
            return Err(ModelError::Domain("noise figure must be >= 0 dB".into()));
        }
        if !(bandwidth_hz.is_finite() && bandwidth_hz > 0.0) {
            return Err(ModelError::Domain(format!(
                "bandwidth must be positive, got {bandwidth_hz} Hz"
            )));
        }
        if aperture_side.m() <= 0.0 {
            return Err(ModelError::Domain("aperture side must be positive".into()));
        }
        if !(effective_dielectric >= 1.0) {
            return Err(ModelError::Domain(format!(
                "effective dielectric constant must be >= 1, got {effective_dielectric}"
            )));
        }
        Ok(RadioSystem {
            frequency,
            tx_power,
            tx_front_end_loss,
            rx_front_end_loss,
            noise_figure,
            bandwidth_hz,
            aperture_side,
            effective_dielectric,
        })
    }
}

/// A square array filling the fixed aperture at half-wavelength spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrayDesign {
    pub n_side: u32,
    pub n_elements: u32,
}

impl ArrayDesign {
    /// Array gain 4 + 10 log10(N), dB.
    pub fn gain(&self) -> Db {
        Db(ELEMENT_GAIN_DB + 10.0 * (self.n_elements as f64).log10())
    }
}

/// Guided wavelength in the element substrate, c0 / (f sqrt(eps_e)).
pub fn effective_wavelength(f: Frequency, effective_dielectric: f64) -> Result<Length> {
    if !(effective_dielectric >= 1.0) {
        return Err(ModelError::Domain(format!(
            "effective dielectric constant must be >= 1, got {effective_dielectric}"
        )));
    }
    Length::from_m(SPEED_OF_LIGHT / (f.hz() * effective_dielectric.sqrt()))
}

/// Size the array for a square aperture of side `w` at half-wavelength
/// element spacing: floor(2 w / lambda) elements per side, at least one.
///
/// `effective_dielectric` shrinks the element itself, not the spacing, so
/// it does not enter the count; it is validated here because it is part of
/// the aperture design input.
pub fn array_design(f: Frequency, w: Length, effective_dielectric: f64) -> Result<ArrayDesign> {
    if w.m() <= 0.0 {
        return Err(ModelError::Domain("aperture side must be positive".into()));
    }
    effective_wavelength(f, effective_dielectric)?;
    let per_side = (2.0 * w.m() / f.wavelength().m()).floor().max(1.0);
    let n_side = per_side as u32;
    Ok(ArrayDesign {
        n_side,
        n_elements: n_side * n_side,
    })
}

/// Received power: P_t - L_ft - L_fr + G_at + G_ar - F_s.
pub fn received_power(sys: &RadioSystem, g_at: Db, g_ar: Db, path_loss: Db) -> Result<Dbm> {
    if path_loss.db() < 0.0 {
        return Err(ModelError::Domain(format!(
            "path loss must be >= 0 dB, got {path_loss}"
        )));
    }
    Ok(sys.tx_power - sys.tx_front_end_loss - sys.rx_front_end_loss + g_at + g_ar - path_loss)
}

/// Receiver noise power 10 log10(k T B) + NF + 30, dBm.
pub fn noise_power(sys: &RadioSystem) -> Result<Dbm> {
    if sys.bandwidth_hz <= 0.0 {
        return Err(ModelError::Domain("bandwidth must be positive".into()));
    }
    let thermal_dbw = 10.0 * (BOLTZMANN * NOISE_TEMPERATURE_K * sys.bandwidth_hz).log10();
    Ok(Dbm(thermal_dbw + sys.noise_figure.db() + 30.0))
}

/// Received signal-to-noise ratio.
pub fn snr(received: Dbm, noise: Dbm) -> Db {
    received - noise
}
