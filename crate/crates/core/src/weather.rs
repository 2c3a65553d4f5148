//! Specific attenuation (dB/km) for rain, fog and dry snow.

use crate::error::{ModelError, Result};
use crate::itu_data::{FamilyFit, RainCoefficientFamily, RainFitTable};
use crate::quantities::{AttenuationRate, Frequency};

/// Validity window of the rain power-law frequency fit, GHz.
pub const RAIN_FIT_WINDOW_GHZ: (f64, f64) = (1.0, 1000.0);

/// Default validity ceiling applied to the dry-snow formula, GHz.
///
/// The formula's source does not state a ceiling; results above ~200 GHz are
/// steep extrapolations and must be requested explicitly.
pub const SNOW_WINDOW_GHZ: (f64, f64) = (1.0, 200.0);

/// Fog temperature sanity window, K.
pub const FOG_TEMPERATURE_WINDOW_K: (f64, f64) = (253.15, 313.15);

/// Default fog temperature, K.
pub const DEFAULT_FOG_TEMPERATURE_K: f64 = 293.15;

/// Path elevation and polarization tilt angles for rain attenuation, degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationGeometry {
    pub path_elevation_deg: f64,
    pub tilt_deg: f64,
}

impl PolarizationGeometry {
    pub fn new(path_elevation_deg: f64, tilt_deg: f64) -> Result<Self> {
        for (name, v) in [
            ("path elevation", path_elevation_deg),
            ("polarization tilt", tilt_deg),
        ] {
            if !(0.0..=90.0).contains(&v) || !v.is_finite() {
                return Err(ModelError::Domain(format!(
                    "{name} angle must lie in [0, 90] degrees, got {v}"
                )));
            }
        }
        Ok(PolarizationGeometry {
            path_elevation_deg,
            tilt_deg,
        })
    }

    /// Horizontal polarization on a horizontal path.
    pub fn horizontal() -> Self {
        PolarizationGeometry {
            path_elevation_deg: 0.0,
            tilt_deg: 0.0,
        }
    }

    /// Vertical polarization on a horizontal path.
    pub fn vertical() -> Self {
        PolarizationGeometry {
            path_elevation_deg: 0.0,
            tilt_deg: 90.0,
        }
    }

    /// Circular polarization (tilt 45 degrees); the default geometry.
    pub fn circular() -> Self {
        PolarizationGeometry {
            path_elevation_deg: 0.0,
            tilt_deg: 45.0,
        }
    }
}

impl Default for PolarizationGeometry {
    fn default() -> Self {
        Self::circular()
    }
}

/// Effective rain power law after polarization mixing: gamma = k * R^alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainPowerLaw {
    pub k: f64,
    pub alpha: f64,
}

fn evaluate_fit(fit: &FamilyFit, f_ghz: f64) -> f64 {
    let lf = f_ghz.log10();
    let sum: f64 = fit
        .terms
        .iter()
        .map(|t| t.a * (-((lf - t.b) / t.c).powi(2)).exp())
        .sum();
    sum + fit.slope * lf + fit.intercept
}

/// Evaluate one coefficient family of the rain fit at `f`.
///
/// The k families are fit in log10 and exponentiated back; the alpha
/// families are returned directly.
pub fn rain_power_law(
    f: Frequency,
    table: &RainFitTable,
    family: RainCoefficientFamily,
) -> Result<f64> {
    let f_ghz = f.ghz();
    let (lo, hi) = RAIN_FIT_WINDOW_GHZ;
    if !(lo..=hi).contains(&f_ghz) {
        return Err(ModelError::OutOfRange {
            quantity: "rain fit frequency",
            value: f_ghz,
            min: lo,
            max: hi,
            unit: "GHz",
        });
    }
    let value = evaluate_fit(table.family(family), f_ghz);
    Ok(if family.is_log_fit() {
        10f64.powf(value)
    } else {
        value
    })
}

/// Combine the horizontal and vertical coefficients for an arbitrary path
/// elevation and polarization tilt.
pub fn mix_polarization(
    kh: f64,
    kv: f64,
    alpha_h: f64,
    alpha_v: f64,
    geom: PolarizationGeometry,
) -> Result<RainPowerLaw> {
    for (name, v) in [("kH", kh), ("kV", kv), ("alphaH", alpha_h), ("alphaV", alpha_v)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(ModelError::Domain(format!(
                "{name} must be positive, got {v}"
            )));
        }
    }
    let cos_theta = geom.path_elevation_deg.to_radians().cos();
    let mixing = cos_theta * cos_theta * (2.0 * geom.tilt_deg.to_radians()).cos();
    let k = (kh + kv + (kh - kv) * mixing) / 2.0;
    let alpha = (kh * alpha_h + kv * alpha_v + (kh * alpha_h - kv * alpha_v) * mixing) / (2.0 * k);
    Ok(RainPowerLaw { k, alpha })
}

/// Rain power law at `f` for the given geometry, from the fit table.
pub fn rain_power_law_mixed(
    f: Frequency,
    geom: PolarizationGeometry,
    table: &RainFitTable,
) -> Result<RainPowerLaw> {
    let kh = rain_power_law(f, table, RainCoefficientFamily::KHorizontal)?;
    let kv = rain_power_law(f, table, RainCoefficientFamily::KVertical)?;
    let ah = rain_power_law(f, table, RainCoefficientFamily::AlphaHorizontal)?;
    let av = rain_power_law(f, table, RainCoefficientFamily::AlphaVertical)?;
    mix_polarization(kh, kv, ah, av, geom)
}

/// Rain specific attenuation gamma_R = k * R^alpha, dB/km.
pub fn rain_specific_attenuation(
    f: Frequency,
    rate_mm_per_h: f64,
    geom: PolarizationGeometry,
    table: &RainFitTable,
) -> Result<AttenuationRate> {
    if !(rate_mm_per_h.is_finite() && rate_mm_per_h >= 0.0) {
        return Err(ModelError::Domain(format!(
            "rain rate must be non-negative, got {rate_mm_per_h} mm/h"
        )));
    }
    if rate_mm_per_h == 0.0 {
        return Ok(AttenuationRate::ZERO);
    }
    let law = rain_power_law_mixed(f, geom, table)?;
    AttenuationRate::from_db_per_km(law.k * rate_mm_per_h.powf(law.alpha))
}

/// Double-Debye complex permittivity of liquid water, with the derived
/// constants used by the fog attenuation coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FogPermittivity {
    pub eps_real: f64,
    pub eps_imag: f64,
    /// (2 + eps') / eps''.
    pub eta: f64,
    pub eps0: f64,
    pub eps1: f64,
    pub eps2: f64,
    /// 300 / T.
    pub theta: f64,
    /// Primary relaxation frequency, GHz.
    pub f_primary_ghz: f64,
    /// Secondary relaxation frequency, GHz.
    pub f_secondary_ghz: f64,
}

/// Double-Debye permittivity of water at frequency `f` and temperature `t_k`.
pub fn fog_permittivity(f: Frequency, t_k: f64) -> Result<FogPermittivity> {
    let (lo, hi) = FOG_TEMPERATURE_WINDOW_K;
    if !(lo..=hi).contains(&t_k) {
        return Err(ModelError::OutOfRange {
            quantity: "fog temperature",
            value: t_k,
            min: lo,
            max: hi,
            unit: "K",
        });
    }
    let theta = 300.0 / t_k;
    let eps0 = 77.66 + 103.3 * (theta - 1.0);
    let eps1 = 0.0671 * eps0;
    let eps2 = 3.52;
    let fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0).powi(2);
    let fs = 39.8 * fp;

    let f_ghz = f.ghz();
    let rp = f_ghz / fp;
    let rs = f_ghz / fs;
    let eps_imag = f_ghz * (eps0 - eps1) / (fp * (1.0 + rp * rp))
        + f_ghz * (eps1 - eps2) / (fs * (1.0 + rs * rs));
    let eps_real = (eps0 - eps1) / (1.0 + rp * rp) + (eps1 - eps2) / (1.0 + rs * rs) + eps2;
    let eta = (2.0 + eps_real) / eps_imag;

    Ok(FogPermittivity {
        eps_real,
        eps_imag,
        eta,
        eps0,
        eps1,
        eps2,
        theta,
        f_primary_ghz: fp,
        f_secondary_ghz: fs,
    })
}

/// Fog attenuation coefficient K_l, (dB/km)/(g/m^3).
pub fn fog_attenuation_coefficient(f: Frequency, t_k: f64) -> Result<f64> {
    let p = fog_permittivity(f, t_k)?;
    Ok(0.819 * f.ghz() / (p.eps_imag * (1.0 + p.eta * p.eta)))
}

/// Fog specific attenuation gamma_c = K_l(f, T) * M, dB/km.
pub fn fog_specific_attenuation(
    f: Frequency,
    liquid_water_g_per_m3: f64,
    t_k: f64,
) -> Result<AttenuationRate> {
    if !(liquid_water_g_per_m3.is_finite() && liquid_water_g_per_m3 >= 0.0) {
        return Err(ModelError::Domain(format!(
            "liquid water density must be non-negative, got {liquid_water_g_per_m3} g/m^3"
        )));
    }
    let kl = fog_attenuation_coefficient(f, t_k)?;
    AttenuationRate::from_db_per_km(kl * liquid_water_g_per_m3)
}

/// Dry-snow specific attenuation, dB/km, with the default validity window.
pub fn snow_specific_attenuation(f: Frequency, rate_mm_per_h: f64) -> Result<AttenuationRate> {
    snow_specific_attenuation_with(f, rate_mm_per_h, false)
}

/// Dry-snow specific attenuation; `allow_extrapolation` lifts the frequency
/// ceiling of [`SNOW_WINDOW_GHZ`].
pub fn snow_specific_attenuation_with(
    f: Frequency,
    rate_mm_per_h: f64,
    allow_extrapolation: bool,
) -> Result<AttenuationRate> {
    if !(rate_mm_per_h.is_finite() && rate_mm_per_h >= 0.0) {
        return Err(ModelError::Domain(format!(
            "snowfall rate must be non-negative, got {rate_mm_per_h} mm/h"
        )));
    }
    let (lo, hi) = SNOW_WINDOW_GHZ;
    let f_ghz = f.ghz();
    if f_ghz < lo || (f_ghz > hi && !allow_extrapolation) {
        return Err(ModelError::OutOfRange {
            quantity: "dry-snow frequency",
            value: f_ghz,
            min: lo,
            max: hi,
            unit: "GHz",
        });
    }
    if rate_mm_per_h == 0.0 {
        return Ok(AttenuationRate::ZERO);
    }
    let lambda_cm = f.wavelength().cm();
    let gamma =
        0.00349 * rate_mm_per_h.powf(1.6) / lambda_cm.powi(4) + 0.00224 * rate_mm_per_h / lambda_cm;
    AttenuationRate::from_db_per_km(gamma)
}

/// A weather scenario, carrying the inputs of the matching specific
/// attenuation model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeatherCondition {
    Clear,
    Rain {
        rate_mm_per_h: f64,
        geometry: PolarizationGeometry,
    },
    Fog {
        liquid_water_g_per_m3: f64,
        temperature_k: f64,
    },
    DrySnow {
        rate_mm_per_h: f64,
    },
}

impl WeatherCondition {
    /// Specific attenuation for this condition at `f`.
    pub fn specific_attenuation(
        &self,
        f: Frequency,
        table: &RainFitTable,
        allow_snow_extrapolation: bool,
    ) -> Result<AttenuationRate> {
        match *self {
            WeatherCondition::Clear => Ok(AttenuationRate::ZERO),
            WeatherCondition::Rain {
                rate_mm_per_h,
                geometry,
            } => rain_specific_attenuation(f, rate_mm_per_h, geometry, table),
            WeatherCondition::Fog {
                liquid_water_g_per_m3,
                temperature_k,
            } => fog_specific_attenuation(f, liquid_water_g_per_m3, temperature_k),
            WeatherCondition::DrySnow { rate_mm_per_h } => {
                snow_specific_attenuation_with(f, rate_mm_per_h, allow_snow_extrapolation)
            }
        }
    }
}
