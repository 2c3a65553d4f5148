//! Clear-air gaseous attenuation via line-by-line summation over the oxygen
//! and water-vapour spectroscopic tables.
//!
//! The atmosphere is evaluated once at ground-level conditions and the
//! resulting rate is applied along the whole path; no altitude layering.

use crate::error::{ModelError, Result};
use crate::itu_data::{SpectralLine, SpectroscopicLineTable};
use crate::quantities::{AttenuationRate, Frequency};

/// Validity window of the line-by-line model, GHz.
pub const GAS_MODEL_WINDOW_GHZ: (f64, f64) = (1.0, 1000.0);

/// Ground-level atmospheric state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphereState {
    /// Dry-air partial pressure, hPa.
    pub dry_pressure_hpa: f64,
    /// Temperature, K.
    pub temperature_k: f64,
    /// Water-vapour density, g/m^3.
    pub vapor_density_g_per_m3: f64,
}

impl AtmosphereState {
    pub fn new(dry_pressure_hpa: f64, temperature_k: f64, vapor_density_g_per_m3: f64) -> Result<Self> {
        if !(dry_pressure_hpa.is_finite() && dry_pressure_hpa > 0.0) {
            return Err(ModelError::Domain(format!(
                "dry pressure must be positive, got {dry_pressure_hpa} hPa"
            )));
        }
        if !(150.0..350.0).contains(&temperature_k) {
            return Err(ModelError::OutOfRange {
                quantity: "temperature",
                value: temperature_k,
                min: 150.0,
                max: 350.0,
                unit: "K",
            });
        }
        if !(vapor_density_g_per_m3.is_finite() && vapor_density_g_per_m3 >= 0.0) {
            return Err(ModelError::Domain(format!(
                "vapour density must be non-negative, got {vapor_density_g_per_m3} g/m^3"
            )));
        }
        Ok(AtmosphereState {
            dry_pressure_hpa,
            temperature_k,
            vapor_density_g_per_m3,
        })
    }

    /// Build from total (dry + vapour) pressure.
    pub fn from_total_pressure(
        total_pressure_hpa: f64,
        temperature_k: f64,
        vapor_density_g_per_m3: f64,
    ) -> Result<Self> {
        let e = vapor_density_g_per_m3 * temperature_k / 216.7;
        if e >= total_pressure_hpa {
            return Err(ModelError::Domain(format!(
                "vapour partial pressure {e:.2} hPa exceeds total pressure {total_pressure_hpa} hPa"
            )));
        }
        Self::new(total_pressure_hpa - e, temperature_k, vapor_density_g_per_m3)
    }

    /// Mean annual global reference atmosphere: 1013.25 hPa total, 288.15 K,
    /// 7.5 g/m^3 water vapour.
    pub fn standard() -> Self {
        Self::from_total_pressure(1013.25, 288.15, 7.5).expect("reference atmosphere is valid")
    }

    /// Water-vapour partial pressure e = rho * T / 216.7, hPa.
    pub fn vapor_partial_pressure_hpa(&self) -> f64 {
        self.vapor_density_g_per_m3 * self.temperature_k / 216.7
    }

    /// 300 / T.
    pub fn theta(&self) -> f64 {
        300.0 / self.temperature_k
    }
}

/// Absorbing species selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gas {
    Oxygen,
    WaterVapour,
}

/// Per-species and total gaseous specific attenuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasAttenuationBreakdown {
    pub oxygen: AttenuationRate,
    pub water_vapour: AttenuationRate,
    pub total: AttenuationRate,
}

fn check_window(f: Frequency) -> Result<f64> {
    let f_ghz = f.ghz();
    let (lo, hi) = GAS_MODEL_WINDOW_GHZ;
    if !(lo..=hi).contains(&f_ghz) {
        return Err(ModelError::OutOfRange {
            quantity: "gas model frequency",
            value: f_ghz,
            min: lo,
            max: hi,
            unit: "GHz",
        });
    }
    Ok(f_ghz)
}

fn oxygen_line_contribution(f: f64, line: &SpectralLine, p: f64, e: f64, theta: f64) -> f64 {
    let [a1, a2, a3, a4, a5, a6] = line.c;
    let strength = a1 * 1e-7 * p * theta.powi(3) * (a2 * (1.0 - theta)).exp();
    let mut width = a3 * 1e-4 * (p * theta.powf(0.8 - a4) + 1.1 * e * theta);
    // Zeeman broadening floor.
    width = (width * width + 2.25e-6).sqrt();
    let correction = (a5 + a6 * theta) * 1e-4 * (p + e) * theta.powf(0.8);
    strength * line_shape(f, line.f0_ghz, width, correction)
}

fn water_line_contribution(f: f64, line: &SpectralLine, p: f64, e: f64, theta: f64) -> f64 {
    let [b1, b2, b3, b4, b5, b6] = line.c;
    let strength = b1 * 1e-1 * e * theta.powf(3.5) * (b2 * (1.0 - theta)).exp();
    let mut width = b3 * 1e-4 * (p * theta.powf(b4) + b5 * e * theta.powf(b6));
    // Doppler broadening of narrow vapour lines.
    width = 0.535 * width
        + (0.217 * width * width + 2.1316e-12 * line.f0_ghz * line.f0_ghz / theta).sqrt();
    strength * line_shape(f, line.f0_ghz, width, 0.0)
}

fn line_shape(f: f64, f0: f64, width: f64, correction: f64) -> f64 {
    let lower = (width - correction * (f0 - f)) / ((f0 - f).powi(2) + width * width);
    let upper = (width - correction * (f0 + f)) / ((f0 + f).powi(2) + width * width);
    f / f0 * (lower + upper)
}

/// Non-resonant dry-air continuum (Debye spectrum of oxygen plus
/// pressure-induced nitrogen absorption).
fn dry_continuum(f: f64, p: f64, e: f64, theta: f64) -> f64 {
    let d = 5.6e-4 * (p + e) * theta.powf(0.8);
    f * p * theta * theta
        * (6.14e-5 / (d * (1.0 + (f / d).powi(2)))
            + 1.4e-12 * p * theta.powf(1.5) / (1.0 + 1.9e-5 * f.powf(1.5)))
}

/// Imaginary part of the complex refractivity for one species.
pub fn refractivity_imag(
    f: Frequency,
    atmos: &AtmosphereState,
    gas: Gas,
    lines: &SpectroscopicLineTable,
) -> Result<f64> {
    let f_ghz = check_window(f)?;
    let p = atmos.dry_pressure_hpa;
    let e = atmos.vapor_partial_pressure_hpa();
    let theta = atmos.theta();
    Ok(match gas {
        Gas::Oxygen => {
            let sum: f64 = lines
                .oxygen
                .iter()
                .map(|l| oxygen_line_contribution(f_ghz, l, p, e, theta))
                .sum();
            sum + dry_continuum(f_ghz, p, e, theta)
        }
        Gas::WaterVapour => lines
            .water
            .iter()
            .map(|l| water_line_contribution(f_ghz, l, p, e, theta))
            .sum(),
    })
}

/// Specific gaseous attenuation beta = 0.1820 * f * (N''_oxygen + N''_water),
/// dB/km, with the per-species split.
pub fn gas_specific_attenuation(
    f: Frequency,
    atmos: &AtmosphereState,
    lines: &SpectroscopicLineTable,
) -> Result<GasAttenuationBreakdown> {
    let f_ghz = check_window(f)?;
    let n_oxygen = refractivity_imag(f, atmos, Gas::Oxygen, lines)?;
    let n_water = refractivity_imag(f, atmos, Gas::WaterVapour, lines)?;
    let oxygen = AttenuationRate::from_db_per_km(0.1820 * f_ghz * n_oxygen)?;
    let water_vapour = AttenuationRate::from_db_per_km(0.1820 * f_ghz * n_water)?;
    Ok(GasAttenuationBreakdown {
        oxygen,
        water_vapour,
        total: oxygen + water_vapour,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::itu_data::SpectroscopicLineTable;
    use approx::assert_relative_eq;

    fn ghz(v: f64) -> Frequency {
        Frequency::from_ghz(v).unwrap()
    }

    #[test]
    fn dry_atmosphere_has_no_water_refractivity() {
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let dry = AtmosphereState::new(1013.25, 288.15, 0.0).unwrap();
        let n = refractivity_imag(ghz(22.0), &dry, Gas::WaterVapour, &lines).unwrap();
        assert_eq!(n, 0.0);
        let b = gas_specific_attenuation(ghz(22.0), &dry, &lines).unwrap();
        assert_eq!(b.water_vapour.db_per_km(), 0.0);
        assert_eq!(b.total.db_per_km(), b.oxygen.db_per_km());
    }

    #[test]
    fn oxygen_complex_dominates_at_60_ghz() {
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let atmos = AtmosphereState::standard();
        let n60 = refractivity_imag(ghz(60.0), &atmos, Gas::Oxygen, &lines).unwrap();
        let n30 = refractivity_imag(ghz(30.0), &atmos, Gas::Oxygen, &lines).unwrap();
        assert!(n60 > 10.0 * n30, "N''(60) = {n60}, N''(30) = {n30}");
    }

    #[test]
    fn attenuation_peaks_at_60_ghz_neighborhood() {
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let atmos = AtmosphereState::standard();
        let beta = |f: f64| {
            gas_specific_attenuation(ghz(f), &atmos, &lines)
                .unwrap()
                .total
                .db_per_km()
        };
        let b60 = beta(60.0);
        assert!(b60 > beta(39.0) && b60 > beta(100.0));
        assert!(b60 > 10.0 && b60 < 20.0, "beta(60) = {b60}");
    }

    #[test]
    fn breakdown_sums_exactly() {
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let atmos = AtmosphereState::standard();
        let b = gas_specific_attenuation(ghz(94.0), &atmos, &lines).unwrap();
        assert_eq!(
            b.total.db_per_km(),
            b.oxygen.db_per_km() + b.water_vapour.db_per_km()
        );
    }

    #[test]
    fn frequency_window_enforced() {
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let atmos = AtmosphereState::standard();
        assert!(gas_specific_attenuation(ghz(0.5), &atmos, &lines).is_err());
        assert!(gas_specific_attenuation(ghz(1001.0), &atmos, &lines).is_err());
    }

    #[test]
    fn standard_atmosphere_partial_pressures() {
        let atmos = AtmosphereState::standard();
        assert_relative_eq!(atmos.vapor_partial_pressure_hpa(), 7.5 * 288.15 / 216.7);
        assert_relative_eq!(
            atmos.dry_pressure_hpa + atmos.vapor_partial_pressure_hpa(),
            1013.25,
            max_relative = 1e-12
        );
    }
}
