//! Multi-weather free-space path loss for line-of-sight links.

use crate::error::{ModelError, Result};
use crate::quantities::{AttenuationRate, Db, Frequency, Length};

/// Free-space constant of the multi-weather path-loss formula (f in MHz,
/// d in km). The analytically exact value in these units is 32.4478 dB;
/// the source model rounds to 32.442 and that value is kept verbatim.
pub const FREE_SPACE_CONSTANT_DB: f64 = 32.442;

/// Additive decomposition of the multi-weather path loss.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossBreakdown {
    pub free_space_db: f64,
    pub gaseous_db: f64,
    pub weather_db: f64,
}

impl PathLossBreakdown {
    pub fn total(&self) -> Db {
        Db(self.free_space_db + self.gaseous_db + self.weather_db)
    }
}

/// Path loss under multiple weather conditions:
/// 32.442 + 20 log10(f_MHz) + 20 log10(d_km) + (beta + gamma) * d_km.
pub fn path_loss_mw(
    f: Frequency,
    d: Length,
    beta: AttenuationRate,
    gamma: AttenuationRate,
) -> Result<PathLossBreakdown> {
    let d_km = d.km();
    if d_km <= 0.0 {
        return Err(ModelError::Domain(
            "path distance must be positive (log singularity at zero)".into(),
        ));
    }
    Ok(PathLossBreakdown {
        free_space_db: FREE_SPACE_CONSTANT_DB + 20.0 * f.mhz().log10() + 20.0 * d_km.log10(),
        gaseous_db: beta.over(d).db(),
        weather_db: gamma.over(d).db(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constant_at_unit_inputs() {
        let pl = path_loss_mw(
            Frequency::from_mhz(1.0).unwrap(),
            Length::from_km(1.0).unwrap(),
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        )
        .unwrap();
        assert_relative_eq!(pl.total().db(), 32.442, max_relative = 1e-12);
    }

    #[test]
    fn distance_doubling_adds_six_db() {
        let f = Frequency::from_ghz(28.0).unwrap();
        let pl1 = path_loss_mw(
            f,
            Length::from_km(2.0).unwrap(),
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        )
        .unwrap();
        let pl2 = path_loss_mw(
            f,
            Length::from_km(4.0).unwrap(),
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        )
        .unwrap();
        assert_relative_eq!(
            pl2.total().db() - pl1.total().db(),
            20.0 * 2f64.log10(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn linear_attenuation_terms() {
        let f = Frequency::from_ghz(60.0).unwrap();
        let d = Length::from_km(2.0).unwrap();
        let clear = path_loss_mw(f, d, AttenuationRate::ZERO, AttenuationRate::ZERO).unwrap();
        let wet = path_loss_mw(
            f,
            d,
            AttenuationRate::from_db_per_km(15.0).unwrap(),
            AttenuationRate::from_db_per_km(0.756).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(
            wet.total().db() - clear.total().db(),
            (15.0 + 0.756) * 2.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn zero_distance_rejected() {
        let err = path_loss_mw(
            Frequency::from_ghz(2.0).unwrap(),
            Length::from_m(0.0).unwrap(),
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        );
        assert!(err.is_err());
    }

    #[test]
    fn breakdown_sums_to_total() {
        let pl = path_loss_mw(
            Frequency::from_ghz(100.0).unwrap(),
            Length::from_km(3.0).unwrap(),
            AttenuationRate::from_db_per_km(0.5).unwrap(),
            AttenuationRate::from_db_per_km(2.0).unwrap(),
        )
        .unwrap();
        assert_eq!(
            pl.total().db(),
            pl.free_space_db + pl.gaseous_db + pl.weather_db
        );
    }
}
