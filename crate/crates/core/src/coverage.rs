//! Coverage-radius inversion of the weather-extended A2G model.
//!
//! The aerial path loss is monotone increasing in the ground radius at fixed
//! altitude, so the radius at which it crosses the maximum tolerable loss is
//! found by bracket expansion plus bisection.

use crate::a2g::{aerial_path_loss_weather, A2GEnvironment};
use crate::error::{ModelError, Result};
use crate::link_budget::{noise_power, RadioSystem};
use crate::quantities::{AttenuationRate, Db, Frequency, Length};

/// Solver residual bound on |PL(h, r*) - PL_max|, dB.
pub const SOLVER_TOLERANCE_DB: f64 = 0.01;

/// Bracket expansion cap on the ground radius, m.
pub const DEFAULT_RADIUS_CAP_M: f64 = 100_000.0;

/// One solved point of a coverage curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoveragePoint {
    pub altitude: Length,
    pub radius: Length,
    pub path_loss: Db,
}

/// Outcome of a single-altitude radius solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusSolution {
    /// The threshold crossing within the search interval.
    Solved(CoveragePoint),
    /// Path loss already exceeds the threshold straight down (r -> 0).
    Unreachable,
    /// Path loss stays below the threshold out to the radius cap.
    Unbounded { radius_cap: Length },
}

/// Largest tolerable path loss keeping SNR at or above `snr_min`:
/// P_t - L_ft - L_fr + G_at + G_ar - N - snr_min.
pub fn max_path_loss(sys: &RadioSystem, g_at: Db, g_ar: Db, snr_min: Db) -> Result<Db> {
    let noise = noise_power(sys)?;
    let budget = sys.tx_power - sys.tx_front_end_loss - sys.rx_front_end_loss + g_at + g_ar;
    Ok(budget - noise - snr_min)
}

/// Ground radius at which the aerial path loss reaches `pl_max` for a UAV at
/// altitude `h`, or a report that the altitude is unreachable / the threshold
/// is never met within the radius cap.
pub fn coverage_radius(
    h: Length,
    pl_max: Db,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
    gamma: AttenuationRate,
) -> Result<RadiusSolution> {
    coverage_radius_capped(h, pl_max, f, env, beta, gamma, DEFAULT_RADIUS_CAP_M)
}

pub fn coverage_radius_capped(
    h: Length,
    pl_max: Db,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
    gamma: AttenuationRate,
    radius_cap_m: f64,
) -> Result<RadiusSolution> {
    if !pl_max.db().is_finite() {
        return Err(ModelError::Domain("path-loss threshold must be finite".into()));
    }
    if h.m() <= 0.0 {
        return Err(ModelError::Domain(
            "altitude must be positive for a coverage solve".into(),
        ));
    }
    let pl_at = |r_m: f64| -> Result<f64> {
        Ok(aerial_path_loss_weather(h, Length::from_m(r_m)?, f, env, beta, gamma)?.db())
    };

    // r -> 0 is the vertical-link limit; if even that exceeds the threshold
    // the altitude itself is out of reach.
    if pl_at(0.0)? > pl_max.db() {
        return Ok(RadiusSolution::Unreachable);
    }

    // Expand the bracket by doubling until the threshold is crossed.
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while pl_at(hi)? <= pl_max.db() {
        lo = hi;
        hi *= 2.0;
        if hi > radius_cap_m {
            if pl_at(radius_cap_m)? <= pl_max.db() {
                return Ok(RadiusSolution::Unbounded {
                    radius_cap: Length::from_m(radius_cap_m)?,
                });
            }
            hi = radius_cap_m;
            break;
        }
    }

    // Bisection; the model is monotone in r so this converges unconditionally.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let pl_mid = pl_at(mid)?;
        if (pl_mid - pl_max.db()).abs() <= SOLVER_TOLERANCE_DB * 0.5 {
            return Ok(RadiusSolution::Solved(CoveragePoint {
                altitude: h,
                radius: Length::from_m(mid)?,
                path_loss: Db(pl_mid),
            }));
        }
        if pl_mid > pl_max.db() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(ModelError::Domain(format!(
        "radius solve did not converge at h = {} (threshold {})",
        h, pl_max
    )))
}

/// Coverage radius over an altitude grid, with the grid argmax.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageCurve {
    /// Solved points only; unreachable/unbounded altitudes are skipped.
    pub points: Vec<CoveragePoint>,
    /// Altitude maximizing the radius (lowest altitude on ties).
    pub best: Option<CoveragePoint>,
}

/// Solve the radius at every altitude of a strictly increasing grid.
pub fn coverage_curve(
    altitudes_m: &[f64],
    pl_max: Db,
    f: Frequency,
    env: &A2GEnvironment,
    beta: AttenuationRate,
    gamma: AttenuationRate,
) -> Result<CoverageCurve> {
    if altitudes_m.is_empty() {
        return Err(ModelError::Domain("altitude grid is empty".into()));
    }
    if altitudes_m.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ModelError::Domain(
            "altitude grid must be strictly increasing".into(),
        ));
    }
    let mut points = Vec::with_capacity(altitudes_m.len());
    for &h in altitudes_m {
        if let RadiusSolution::Solved(p) =
            coverage_radius(Length::from_m(h)?, pl_max, f, env, beta, gamma)?
        {
            points.push(p);
        }
    }
    // Exhaustive scan, no unimodality assumption.
    let best = points
        .iter()
        .copied()
        .fold(None::<CoveragePoint>, |acc, p| match acc {
            Some(b) if p.radius.m() > b.radius.m() => Some(p),
            None => Some(p),
            other => other,
        });
    Ok(CoverageCurve { points, best })
}

/// Default altitude grid: 10 m to 5000 m in 10 m steps.
pub fn default_altitude_grid() -> Vec<f64> {
    (1..=500).map(|i| i as f64 * 10.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link_budget::noise_power;
    use crate::quantities::Dbm;
    use approx::assert_relative_eq;

    fn urban() -> A2GEnvironment {
        A2GEnvironment::preset("urban").unwrap()
    }

    fn system() -> RadioSystem {
        RadioSystem::new(
            Frequency::from_ghz(28.0).unwrap(),
            Dbm(45.0),
            Db(1.0),
            Db(1.0),
            Db(2.0),
            100e6,
            Length::from_cm(10.0).unwrap(),
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn max_path_loss_arithmetic() {
        let sys = system();
        let noise = noise_power(&sys).unwrap();
        let pl = max_path_loss(&sys, Db(36.0), Db(36.0), Db(10.0)).unwrap();
        assert_relative_eq!(
            pl.db(),
            45.0 - 2.0 + 72.0 - noise.dbm() - 10.0,
            max_relative = 1e-12
        );

        let stricter = max_path_loss(&sys, Db(36.0), Db(36.0), Db(13.0)).unwrap();
        assert_relative_eq!(pl.db() - stricter.db(), 3.0, max_relative = 1e-12);
    }

    #[test]
    fn solver_residual_contract() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        let beta = AttenuationRate::from_db_per_km(0.1).unwrap();
        let gamma = AttenuationRate::from_db_per_km(2.0).unwrap();
        let sol = coverage_radius(Length::from_m(500.0).unwrap(), Db(130.0), f, &env, beta, gamma)
            .unwrap();
        match sol {
            RadiusSolution::Solved(p) => {
                let pl = aerial_path_loss_weather(p.altitude, p.radius, f, &env, beta, gamma)
                    .unwrap();
                assert!((pl.db() - 130.0).abs() <= SOLVER_TOLERANCE_DB);
            }
            other => panic!("expected a solved radius, got {other:?}"),
        }
    }

    #[test]
    fn heavier_weather_shrinks_radius() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        let beta = AttenuationRate::from_db_per_km(0.1).unwrap();
        let h = Length::from_m(800.0).unwrap();
        let radius = |g: f64| {
            match coverage_radius(
                h,
                Db(135.0),
                f,
                &env,
                beta,
                AttenuationRate::from_db_per_km(g).unwrap(),
            )
            .unwrap()
            {
                RadiusSolution::Solved(p) => p.radius.m(),
                other => panic!("{other:?}"),
            }
        };
        assert!(radius(0.0) > radius(2.0));
        assert!(radius(2.0) > radius(6.0));
    }

    #[test]
    fn unreachable_altitude_reported() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        let sol = coverage_radius(
            Length::from_m(5000.0).unwrap(),
            Db(80.0),
            f,
            &env,
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        )
        .unwrap();
        assert_eq!(sol, RadiusSolution::Unreachable);
    }

    #[test]
    fn loose_threshold_reports_unbounded() {
        let env = urban();
        let f = Frequency::from_ghz(2.0).unwrap();
        let sol = coverage_radius(
            Length::from_m(100.0).unwrap(),
            Db(300.0),
            f,
            &env,
            AttenuationRate::ZERO,
            AttenuationRate::ZERO,
        )
        .unwrap();
        assert!(matches!(sol, RadiusSolution::Unbounded { .. }));
    }

    #[test]
    fn curve_reports_grid_argmax() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        let grid: Vec<f64> = (1..=50).map(|i| i as f64 * 100.0).collect();
        let curve = coverage_curve(
            &grid,
            Db(135.0),
            f,
            &env,
            AttenuationRate::from_db_per_km(0.1).unwrap(),
            AttenuationRate::ZERO,
        )
        .unwrap();
        assert!(!curve.points.is_empty());
        let best = curve.best.unwrap();
        let max_radius = curve
            .points
            .iter()
            .map(|p| p.radius.m())
            .fold(f64::MIN, f64::max);
        assert_eq!(best.radius.m(), max_radius);
    }

    #[test]
    fn empty_and_unsorted_grids_rejected() {
        let env = urban();
        let f = Frequency::from_ghz(28.0).unwrap();
        assert!(coverage_curve(&[], Db(120.0), f, &env, AttenuationRate::ZERO, AttenuationRate::ZERO)
            .is_err());
        assert!(coverage_curve(
            &[100.0, 50.0],
            Db(120.0),
            f,
            &env,
            AttenuationRate::ZERO,
            AttenuationRate::ZERO
        )
        .is_err());
    }
}
