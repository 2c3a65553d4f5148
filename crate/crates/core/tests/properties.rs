//! Property tests over the model invariants.

use proptest::prelude::*;
use uavprop::a2g::{
    aerial_path_loss, aerial_path_loss_weather, aerial_path_loss_weather_grouped, los_nlos_path_loss,
    los_probability, A2GEnvironment,
};
use uavprop::gas::{gas_specific_attenuation, AtmosphereState};
use uavprop::itu_data::{RainFitTable, SpectroscopicLineTable};
use uavprop::link_budget::{noise_power, received_power, snr, RadioSystem};
use uavprop::propagation::path_loss_mw;
use uavprop::quantities::{slant_distance, AttenuationRate, Db, Dbm, Frequency, Length};
use uavprop::weather::{
    fog_specific_attenuation, mix_polarization, rain_specific_attenuation,
    snow_specific_attenuation, PolarizationGeometry,
};

fn ghz(v: f64) -> Frequency {
    Frequency::from_ghz(v).unwrap()
}

fn m(v: f64) -> Length {
    Length::from_m(v).unwrap()
}

fn rate(v: f64) -> AttenuationRate {
    AttenuationRate::from_db_per_km(v).unwrap()
}

fn urban() -> A2GEnvironment {
    A2GEnvironment::preset("urban").unwrap()
}

proptest! {
    #[test]
    fn weather_attenuation_zero_at_zero_intensity(f_ghz in 1.0f64..200.0) {
        let table = RainFitTable::shipped().unwrap();
        let geom = PolarizationGeometry::circular();
        prop_assert_eq!(
            rain_specific_attenuation(ghz(f_ghz), 0.0, geom, &table).unwrap().db_per_km(),
            0.0
        );
        prop_assert_eq!(
            fog_specific_attenuation(ghz(f_ghz), 0.0, 293.15).unwrap().db_per_km(),
            0.0
        );
        prop_assert_eq!(
            snow_specific_attenuation(ghz(f_ghz), 0.0).unwrap().db_per_km(),
            0.0
        );
    }

    #[test]
    fn weather_attenuation_monotone_in_intensity(
        f_ghz in 1.0f64..200.0,
        lo in 0.0f64..40.0,
        step in 0.01f64..40.0,
    ) {
        let table = RainFitTable::shipped().unwrap();
        let geom = PolarizationGeometry::circular();
        let hi = lo + step;
        let f = ghz(f_ghz);
        prop_assert!(
            rain_specific_attenuation(f, hi, geom, &table).unwrap().db_per_km()
                >= rain_specific_attenuation(f, lo, geom, &table).unwrap().db_per_km()
        );
        prop_assert!(
            fog_specific_attenuation(f, hi / 40.0, 293.15).unwrap().db_per_km()
                >= fog_specific_attenuation(f, lo / 40.0, 293.15).unwrap().db_per_km()
        );
        prop_assert!(
            snow_specific_attenuation(f, hi).unwrap().db_per_km()
                >= snow_specific_attenuation(f, lo).unwrap().db_per_km()
        );
    }

    #[test]
    fn polarization_mix_swap_symmetry(
        kh in 1e-4f64..3.0,
        kv in 1e-4f64..3.0,
        ah in 0.4f64..1.8,
        av in 0.4f64..1.8,
        elev in 0.0f64..90.0,
        tilt in 0.0f64..90.0,
    ) {
        let geom = PolarizationGeometry::new(elev, tilt).unwrap();
        let swapped = PolarizationGeometry::new(elev, 90.0 - tilt).unwrap();
        let a = mix_polarization(kh, kv, ah, av, geom).unwrap();
        let b = mix_polarization(kv, kh, av, ah, swapped).unwrap();
        prop_assert!((a.k - b.k).abs() <= 1e-9 * a.k.abs());
        prop_assert!((a.alpha - b.alpha).abs() <= 1e-9 * a.alpha.abs());
    }

    #[test]
    fn los_probabilities_sum_to_one_and_grow_with_elevation(
        h in 1.0f64..5000.0,
        r in 1.0f64..20000.0,
    ) {
        for env in A2GEnvironment::presets() {
            let split = los_probability(m(h), m(r), &env).unwrap();
            prop_assert!((split.p_los + split.p_nlos - 1.0).abs() < 1e-12);
            prop_assert!((0.0..=1.0).contains(&split.p_los));
            let steeper = los_probability(m(h * 1.1), m(r), &env).unwrap();
            prop_assert!(steeper.p_los >= split.p_los);
        }
    }

    #[test]
    fn weighted_path_loss_between_los_and_nlos(
        h in 1.0f64..5000.0,
        r in 1.0f64..20000.0,
        f_ghz in 1.0f64..900.0,
    ) {
        let env = urban();
        let d = slant_distance(m(h), m(r)).unwrap();
        let (pl_los, pl_nlos) = los_nlos_path_loss(ghz(f_ghz), d, &env).unwrap();
        let pl = aerial_path_loss(m(h), m(r), ghz(f_ghz), &env, AttenuationRate::ZERO).unwrap();
        prop_assert!(pl.db() >= pl_los.db() - 1e-9 && pl.db() <= pl_nlos.db() + 1e-9);
    }

    #[test]
    fn weather_extension_reduces_to_clear_air(
        h in 1.0f64..5000.0,
        r in 1.0f64..20000.0,
        f_ghz in 1.0f64..900.0,
        beta in 0.0f64..20.0,
    ) {
        let env = urban();
        let clear = aerial_path_loss(m(h), m(r), ghz(f_ghz), &env, rate(beta)).unwrap();
        let zero_gamma =
            aerial_path_loss_weather(m(h), m(r), ghz(f_ghz), &env, rate(beta), AttenuationRate::ZERO)
                .unwrap();
        prop_assert!((clear.db() - zero_gamma.db()).abs() <= 1e-12);
    }

    #[test]
    fn grouped_form_agrees(
        h in 1.0f64..5000.0,
        r in 1.0f64..20000.0,
        f_ghz in 1.0f64..900.0,
        beta in 0.0f64..20.0,
        gamma in 0.0f64..60.0,
    ) {
        let env = urban();
        let a = aerial_path_loss_weather(m(h), m(r), ghz(f_ghz), &env, rate(beta), rate(gamma))
            .unwrap();
        let b = aerial_path_loss_weather_grouped(m(h), m(r), ghz(f_ghz), &env, rate(beta), rate(gamma))
            .unwrap();
        prop_assert!((a.db() - b.db()).abs() <= 1e-9);
    }

    #[test]
    fn path_loss_mw_unit_mixing(
        f_ghz in 0.1f64..900.0,
        d_km in 0.01f64..50.0,
        beta in 0.0f64..20.0,
        gamma in 0.0f64..60.0,
    ) {
        let d = Length::from_km(d_km).unwrap();
        let from_hz = path_loss_mw(Frequency::from_hz(f_ghz * 1e9).unwrap(), d, rate(beta), rate(gamma)).unwrap();
        let from_ghz = path_loss_mw(Frequency::from_ghz(f_ghz).unwrap(), d, rate(beta), rate(gamma)).unwrap();
        let from_mhz = path_loss_mw(Frequency::from_mhz(f_ghz * 1e3).unwrap(), d, rate(beta), rate(gamma)).unwrap();
        prop_assert!((from_hz.total().db() - from_ghz.total().db()).abs() <= 1e-9);
        prop_assert!((from_hz.total().db() - from_mhz.total().db()).abs() <= 1e-9);
    }

    #[test]
    fn path_loss_mw_strictly_increasing(
        f_ghz in 0.1f64..900.0,
        d_km in 0.01f64..50.0,
        beta in 0.0f64..20.0,
        gamma in 0.0f64..60.0,
    ) {
        let base = path_loss_mw(ghz(f_ghz), Length::from_km(d_km).unwrap(), rate(beta), rate(gamma))
            .unwrap()
            .total()
            .db();
        let bump = |f: f64, d: f64, b: f64, g: f64| {
            path_loss_mw(ghz(f), Length::from_km(d).unwrap(), rate(b), rate(g))
                .unwrap()
                .total()
                .db()
        };
        prop_assert!(bump(f_ghz * 1.1, d_km, beta, gamma) > base);
        prop_assert!(bump(f_ghz, d_km * 1.1, beta, gamma) > base);
        prop_assert!(bump(f_ghz, d_km, beta + 0.5, gamma) > base);
        prop_assert!(bump(f_ghz, d_km, beta, gamma + 0.5) > base);
    }

    #[test]
    fn snr_decreases_with_weather_intensity(rain_rate in 0.5f64..50.0) {
        // End-to-end chain at 28 GHz, fixed geometry: heavier rain, lower SNR.
        let table = RainFitTable::shipped().unwrap();
        let lines = SpectroscopicLineTable::shipped().unwrap();
        let atmos = AtmosphereState::standard();
        let f = ghz(28.0);
        let env = urban();
        let sys = RadioSystem::new(
            f,
            Dbm(45.0),
            Db(1.0),
            Db(1.0),
            Db(2.0),
            100e6,
            Length::from_cm(10.0).unwrap(),
            1.0,
        )
        .unwrap();
        let beta = gas_specific_attenuation(f, &atmos, &lines).unwrap().total;
        let geom = PolarizationGeometry::circular();
        let snr_at = |rr: f64| {
            let gamma = rain_specific_attenuation(f, rr, geom, &table).unwrap();
            let pl = aerial_path_loss_weather(m(500.0), m(1500.0), f, &env, beta, gamma).unwrap();
            let pr = received_power(&sys, Db(36.0), Db(36.0), pl).unwrap();
            snr(pr, noise_power(&sys).unwrap()).db()
        };
        prop_assert!(snr_at(rain_rate * 1.2) < snr_at(rain_rate));
    }
}
