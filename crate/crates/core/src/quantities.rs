//! Unit-carrying scalar quantities.
//!
//! Everything internal is canonical SI (Hz, m, K); conversion to the unit
//! conventions of the empirical formulas (GHz, MHz, km, cm) happens only at
//! formula boundaries. Decibel bookkeeping distinguishes relative dB from
//! absolute dBm at the type level so the two are never summed by accident.

use crate::error::{ModelError, Result};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Carrier or model frequency; canonical unit Hz, strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Frequency(f64);

impl Frequency {
    pub fn from_hz(hz: f64) -> Result<Self> {
        if hz.is_finite() && hz > 0.0 {
            Ok(Frequency(hz))
        } else {
            Err(ModelError::Domain(format!(
                "frequency must be finite and positive, got {hz} Hz"
            )))
        }
    }

    pub fn from_ghz(ghz: f64) -> Result<Self> {
        Self::from_hz(ghz * 1e9)
    }

    pub fn from_mhz(mhz: f64) -> Result<Self> {
        Self::from_hz(mhz * 1e6)
    }

    pub fn hz(self) -> f64 {
        self.0
    }

    pub fn ghz(self) -> f64 {
        self.0 / 1e9
    }

    pub fn mhz(self) -> f64 {
        self.0 / 1e6
    }

    /// Free-space wavelength c0/f.
    pub fn wavelength(self) -> Length {
        Length(SPEED_OF_LIGHT / self.0)
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} GHz", self.ghz())
    }
}

/// Distance, altitude, radius or wavelength; canonical unit m, non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length(f64);

impl Length {
    pub fn from_m(m: f64) -> Result<Self> {
        if m.is_finite() && m >= 0.0 {
            Ok(Length(m))
        } else {
            Err(ModelError::Domain(format!(
                "length must be finite and non-negative, got {m} m"
            )))
        }
    }

    pub fn from_km(km: f64) -> Result<Self> {
        Self::from_m(km * 1e3)
    }

    pub fn from_cm(cm: f64) -> Result<Self> {
        Self::from_m(cm * 1e-2)
    }

    pub fn m(self) -> f64 {
        self.0
    }

    pub fn km(self) -> f64 {
        self.0 / 1e3
    }

    pub fn cm(self) -> f64 {
        self.0 * 1e2
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m", self.0)
    }
}

/// Specific attenuation in dB/km, non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AttenuationRate(f64);

impl AttenuationRate {
    pub const ZERO: AttenuationRate = AttenuationRate(0.0);

    pub fn from_db_per_km(v: f64) -> Result<Self> {
        if v.is_finite() && v >= 0.0 {
            Ok(AttenuationRate(v))
        } else {
            Err(ModelError::Domain(format!(
                "attenuation rate must be finite and non-negative, got {v} dB/km"
            )))
        }
    }

    pub fn db_per_km(self) -> f64 {
        self.0
    }

    /// dB accumulated over a path of the given length.
    pub fn over(self, d: Length) -> Db {
        Db(self.0 * d.km())
    }
}

impl Add for AttenuationRate {
    type Output = AttenuationRate;
    fn add(self, rhs: Self) -> Self {
        AttenuationRate(self.0 + rhs.0)
    }
}

/// Relative decibel value (gain, loss, SNR).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Db(pub f64);

/// Absolute power level in dBm.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Dbm(pub f64);

impl Db {
    pub fn db(self) -> f64 {
        self.0
    }
}

impl Dbm {
    pub fn dbm(self) -> f64 {
        self.0
    }

    /// Convert to absolute dBW (subtracts the 30 dB milliwatt offset).
    pub fn dbw(self) -> f64 {
        self.0 - 30.0
    }
}

impl Add for Db {
    type Output = Db;
    fn add(self, rhs: Db) -> Db {
        Db(self.0 + rhs.0)
    }
}

impl Sub for Db {
    type Output = Db;
    fn sub(self, rhs: Db) -> Db {
        Db(self.0 - rhs.0)
    }
}

impl Neg for Db {
    type Output = Db;
    fn neg(self) -> Db {
        Db(-self.0)
    }
}

impl Add<Db> for Dbm {
    type Output = Dbm;
    fn add(self, rhs: Db) -> Dbm {
        Dbm(self.0 + rhs.0)
    }
}

impl Sub<Db> for Dbm {
    type Output = Dbm;
    fn sub(self, rhs: Db) -> Dbm {
        Dbm(self.0 - rhs.0)
    }
}

/// Ratio of two absolute levels is a relative value.
impl Sub for Dbm {
    type Output = Db;
    fn sub(self, rhs: Dbm) -> Db {
        Db(self.0 - rhs.0)
    }
}

impl fmt::Display for Db {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dB", self.0)
    }
}

impl fmt::Display for Dbm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dBm", self.0)
    }
}

/// Free-space wavelength of a carrier.
pub fn wavelength(f: Frequency) -> Length {
    f.wavelength()
}

/// Slant distance between a platform at altitude `h` and a ground point at
/// horizontal range `r`.
pub fn slant_distance(h: Length, r: Length) -> Result<Length> {
    if h.m() == 0.0 && r.m() == 0.0 {
        return Err(ModelError::Domain(
            "degenerate geometry: altitude and ground radius both zero".into(),
        ));
    }
    Length::from_m(h.m().hypot(r.m()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn wavelength_examples() {
        let l = wavelength(Frequency::from_ghz(60.0).unwrap());
        assert_relative_eq!(l.m(), 4.9965e-3, max_relative = 1e-4);
        let l = wavelength(Frequency::from_ghz(300.0).unwrap());
        assert_relative_eq!(l.m(), 0.99931e-3, max_relative = 1e-4);
        let l = wavelength(Frequency::from_hz(SPEED_OF_LIGHT).unwrap());
        assert_relative_eq!(l.m(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn frequency_rejects_non_positive() {
        assert!(Frequency::from_hz(0.0).is_err());
        assert!(Frequency::from_ghz(-2.0).is_err());
        assert!(Frequency::from_hz(f64::NAN).is_err());
    }

    #[test]
    fn frequency_round_trip_exact() {
        let f = Frequency::from_hz(28.5e9).unwrap();
        let back = Frequency::from_ghz(f.ghz()).unwrap();
        assert_relative_eq!(back.hz(), f.hz(), max_relative = 1e-12);
    }

    #[test]
    fn slant_distance_examples() {
        let d = slant_distance(Length::from_m(3.0).unwrap(), Length::from_m(4.0).unwrap()).unwrap();
        assert_relative_eq!(d.m(), 5.0);
        let d =
            slant_distance(Length::from_m(100.0).unwrap(), Length::from_m(0.0).unwrap()).unwrap();
        assert_relative_eq!(d.m(), 100.0);
        let d = slant_distance(
            Length::from_m(500.0).unwrap(),
            Length::from_m(1200.0).unwrap(),
        )
        .unwrap();
        assert_relative_eq!(d.m(), 1300.0);
    }

    #[test]
    fn slant_distance_degenerate() {
        let zero = Length::from_m(0.0).unwrap();
        assert!(slant_distance(zero, zero).is_err());
    }

    #[test]
    fn decibel_bookkeeping() {
        let p = Dbm(45.0) - Db(2.0) + Db(36.0);
        assert_eq!(p.dbm(), 79.0);
        let snr = Dbm(-5.0) - Dbm(-92.86);
        assert_relative_eq!(snr.db(), 87.86);
    }
}
