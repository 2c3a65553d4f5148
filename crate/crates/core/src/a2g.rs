//! Probabilistic LoS/NLoS air-to-ground path loss.

use crate::error::{ModelError, Result};
use crate::quantities::{slant_distance, AttenuationRate, Db, Frequency, Length, SPEED_OF_LIGHT};
use serde::{Deserialize, Serialize};

/// Environment preset file embedded in the crate.
pub const A2G_ENVIRONMENTS_JSON: &str = include_str!("../data/a2g_environments.json");

/// Environment-dependent parameters of the A2G model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct A2GEnvironment {
    pub label: String,
    /// Sigmoid offset of the LoS probability.
    pub a: f64,
    /// Sigmoid steepness of the LoS probability, 1/degree.
    pub b: f64,
    /// Mean excess path loss under LoS, dB.
    pub eta_los_db: f64,
    /// Mean excess path loss under NLoS, dB.
    pub eta_nlos_db: f64,
    #[serde(default)]
    pub provenance: String,
}

impl A2GEnvironment {
    pub fn validate(&self) -> Result<()> {
        if !(self.a > 0.0 && self.b > 0.0) {
            return Err(ModelError::Domain(format!(
                "environment {:?}: a and b must be positive",
                self.label
            )));
        }
        if !(self.eta_los_db >= 0.0 && self.eta_nlos_db >= self.eta_los_db) {
            return Err(ModelError::Domain(format!(
                "environment {:?}: need 0 <= eta_LoS <= eta_NLoS",
                self.label
            )));
        }
        Ok(())
    }

    /// All shipped presets.
    pub fn presets() -> Vec<A2GEnvironment> {
        let presets: Vec<A2GEnvironment> =
            serde_json::from_str(A2G_ENVIRONMENTS_JSON).expect("embedded presets parse");
        for p in &presets {
            p.validate().expect("embedded presets are valid");
        }
        presets
    }

    /// Look up a shipped preset by label.
    pub fn preset(label: &str) -> Result<A2GEnvironment> {
        Self::presets()
            .into_iter()
            .find(|p| p.label == label)
            .ok_or_else(|| {
                ModelError::Domain(format!(
                    "unknown environment preset {:?} (shipped: suburban, urban, dense-urban, high-rise)",
                    label
                ))
            })
    }

    /// Load presets from an external JSON file with the shipped layout.
    pub fn load_presets(path: &std::path::Path) -> Result<Vec<A2GEnvironment>> {
        let text = std::fs::read_to_string(path).map_err(|source| crate::error::DataError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let presets: Vec<A2GEnvironment> =
            serde_json::from_str(&text).map_err(|e| crate::error::DataError::Malformed {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
        for p in &presets {
            p.validate()?;
        }
        Ok(presets)
    }
}

/// Complementary LoS/NLoS probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LosSplit {
    pub p_los: f64,
    pub p_nlos: f64,
}

/// Elevation angle seen from the ground point, degrees. `r = 0` is the
/// vertical-link limit (90 degrees).
pub fn elevation_angle_deg(h: Length, r: Length) -> f64 {
    if r.m() == 0.0 {
        90.0
    } else {
        (h.m() / r.m()).atan().to_degrees()
    }
}

/// LoS probability of the sigmoid elevation-angle model.
pub fn los_probability(h: Length, r: Length, env: &A2GEnvironment) -> Result<LosSplit> {
    env.validate()?;
    let angle = elevation_angle_deg(h, r);
    let p_los = 1.0 / (1.0 + env.a * (-env.b * (angle - env.a)).exp());
    Ok(LosSplit {
        p_los,
        p_nlos: 1.0 - p_los,
    })
}

/// Free-space term 20 log10(4 pi f d / c), dB.
fn free_space_db(f: Frequency, d: Length) -> f64 {
    20.0 * (4.0 * std::f64::consts::PI * f.hz() * d.m() / SPEED_OF_LIGHT).log10()
}

/// LoS and NLoS path loss: free-space term plus the respective excess loss.
pub fn los_nlos_path_loss(f: Frequency, d: Length, env: &A2GEnvironment) -> Result<(Db, Db)> {
    env.validate()?;
    if d.m() <= 0.0 {
        return Err(ModelError::Domain(
            "link distance must be positive".into(),
        ));
    }
    let fs = free_space_db(f, d);
    Ok((Db(fs + env.eta_los_db), Db(fs + env.eta_nlos_db)))
}

/// Clear-air aerial path loss: probability-weighted LoS/NLoS mixture plus
/// the gaseous term over the slant path.
pub fn aerial_path_loss(
    h: Length,
    r: Length,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
) -> Result<Db> {
    aerial_path_loss_weather(h, r, f, env, beta, AttenuationRate::ZERO)
}

/// Weather-extended aerial path loss: the clear-air model plus the weather
/// attenuation rate over the slant path.
pub fn aerial_path_loss_weather(
    h: Length,
    r: Length,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
    gamma: AttenuationRate,
) -> Result<Db> {
    let d = slant_distance(h, r)?;
    let split = los_probability(h, r, env)?;
    let (pl_los, pl_nlos) = los_nlos_path_loss(f, d, env)?;
    let weighted = pl_los.db() * split.p_los + pl_nlos.db() * split.p_nlos;
    Ok(Db(weighted + (beta + gamma).over(d).db()))
}

/// The same quantity in its regrouped form
/// A * P_LoS + 20 log10(d) + B + (beta + gamma) d / 1000, with
/// A = eta_LoS - eta_NLoS and B = 20 log10(4 pi f / c) + eta_NLoS.
/// Kept as an algebraic cross-check of [`aerial_path_loss_weather`].
pub fn aerial_path_loss_weather_grouped(
    h: Length,
    r: Length,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
    gamma: AttenuationRate,
) -> Result<Db> {
    let d = slant_distance(h, r)?;
    if d.m() <= 0.0 {
        return Err(ModelError::Domain("link distance must be positive".into()));
    }
    env.validate()?;
    let split = los_probability(h, r, env)?;
    let a_term = env.eta_los_db - env.eta_nlos_db;
    let b_term =
        20.0 * (4.0 * std::f64::consts::PI * f.hz() / SPEED_OF_LIGHT).log10() + env.eta_nlos_db;
    Ok(Db(a_term * split.p_los
        + 20.0 * d.m().log10()
        + b_term
        + (beta + gamma).over(d).db()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn urban() -> A2GEnvironment {
        A2GEnvironment::preset("urban").unwrap()
    }

    fn m(v: f64) -> Length {
        Length::from_m(v).unwrap()
    }

    #[test]
    fn shipped_presets_resolve() {
        for label in ["suburban", "urban", "dense-urban", "high-rise"] {
            let env = A2GEnvironment::preset(label).unwrap();
            assert_eq!(env.label, label);
        }
        assert!(A2GEnvironment::preset("ocean").is_err());
    }

    #[test]
    fn urban_los_probability_values() {
        let env = urban();
        // 45 degree elevation.
        let split = los_probability(m(1000.0), m(1000.0), &env).unwrap();
        assert_relative_eq!(split.p_los, 0.9677, epsilon = 1e-4);
        // Grazing path.
        let split = los_probability(m(0.0), m(1000.0), &env).unwrap();
        assert_relative_eq!(split.p_los, 0.02188, epsilon = 1e-4);
        // Complement.
        assert_relative_eq!(split.p_los + split.p_nlos, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn vertical_link_is_ninety_degrees() {
        assert_eq!(elevation_angle_deg(m(500.0), m(0.0)), 90.0);
    }

    #[test]
    fn los_nlos_split_difference() {
        let env = urban();
        let f = Frequency::from_ghz(2.0).unwrap();
        let (lo, nlo) = los_nlos_path_loss(f, m(1000.0), &env).unwrap();
        assert_relative_eq!(
            nlo.db() - lo.db(),
            env.eta_nlos_db - env.eta_los_db,
            max_relative = 1e-12
        );
        // Free-space term at 2 GHz, 1 km.
        assert_relative_eq!(lo.db() - env.eta_los_db, 98.47, epsilon = 0.01);
    }

    #[test]
    fn equal_excess_losses_collapse_to_free_space() {
        let mut env = urban();
        env.eta_los_db = 3.0;
        env.eta_nlos_db = 3.0;
        let f = Frequency::from_ghz(28.0).unwrap();
        let pl = aerial_path_loss(m(300.0), m(400.0), f, &env, AttenuationRate::ZERO).unwrap();
        let d = slant_distance(m(300.0), m(400.0)).unwrap();
        let expected = 20.0
            * (4.0 * std::f64::consts::PI * f.hz() * d.m() / SPEED_OF_LIGHT).log10()
            + 3.0;
        assert_relative_eq!(pl.db(), expected, max_relative = 1e-12);
    }

    #[test]
    fn weather_term_is_additive() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        let (h, r) = (m(1200.0), m(1600.0)); // d = 2000 m
        let clear = aerial_path_loss_weather(h, r, f, &env, AttenuationRate::ZERO, AttenuationRate::ZERO)
            .unwrap();
        let wet = aerial_path_loss_weather(
            h,
            r,
            f,
            &env,
            AttenuationRate::ZERO,
            AttenuationRate::from_db_per_km(1.0).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(wet.db() - clear.db(), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn grouped_form_matches_weighted_form() {
        let env = urban();
        let f = Frequency::from_ghz(60.0).unwrap();
        let beta = AttenuationRate::from_db_per_km(15.0).unwrap();
        let gamma = AttenuationRate::from_db_per_km(0.76).unwrap();
        for (h, r) in [(100.0, 50.0), (500.0, 2000.0), (3000.0, 300.0)] {
            let w = aerial_path_loss_weather(m(h), m(r), f, &env, beta, gamma).unwrap();
            let g = aerial_path_loss_weather_grouped(m(h), m(r), f, &env, beta, gamma).unwrap();
            assert_relative_eq!(w.db(), g.db(), epsilon = 1e-9);
        }
    }

    #[test]
    fn negative_radius_rejected_by_length_type() {
        assert!(Length::from_m(-1.0).is_err());
    }
}
