//! Shared scenario parameters: weather grammar, sweep ranges, and the
//! optional JSON config file for radio-system and atmosphere defaults.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use uavprop::error::Result as ModelResult;
use uavprop::gas::AtmosphereState;
use uavprop::link_budget::RadioSystem;
use uavprop::quantities::{Db, Dbm, Frequency, Length};
use uavprop::weather::{PolarizationGeometry, WeatherCondition, DEFAULT_FOG_TEMPERATURE_K};

/// Weather argument grammar: `clear`, `rain:<mm/h>`, `fog:<g/m3>`,
/// `snow:<mm/h>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeatherSpec(pub WeatherCondition);

impl FromStr for WeatherSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let usage = "expected clear | rain:<mm/h> | fog:<g/m3> | snow:<mm/h>";
        if s == "clear" {
            return Ok(WeatherSpec(WeatherCondition::Clear));
        }
        let (kind, value) = s.split_once(':').ok_or_else(|| format!("{s:?}: {usage}"))?;
        let value: f64 = value
            .parse()
            .map_err(|_| format!("{s:?}: intensity is not a number; {usage}"))?;
        if !(value.is_finite() && value >= 0.0) {
            return Err(format!("{s:?}: intensity must be non-negative"));
        }
        let condition = match kind {
            "rain" => WeatherCondition::Rain {
                rate_mm_per_h: value,
                geometry: PolarizationGeometry::circular(),
            },
            "fog" => WeatherCondition::Fog {
                liquid_water_g_per_m3: value,
                temperature_k: DEFAULT_FOG_TEMPERATURE_K,
            },
            "snow" => WeatherCondition::DrySnow {
                rate_mm_per_h: value,
            },
            _ => return Err(format!("{s:?}: unknown weather kind {kind:?}; {usage}")),
        };
        Ok(WeatherSpec(condition))
    }
}

impl fmt::Display for WeatherSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            WeatherCondition::Clear => write!(f, "clear"),
            WeatherCondition::Rain { rate_mm_per_h, .. } => write!(f, "rain:{rate_mm_per_h}"),
            WeatherCondition::Fog {
                liquid_water_g_per_m3,
                ..
            } => write!(f, "fog:{liquid_water_g_per_m3}"),
            WeatherCondition::DrySnow { rate_mm_per_h } => write!(f, "snow:{rate_mm_per_h}"),
        }
    }
}

/// Linear sweep grammar: `<value>` for a single point or
/// `<start>:<end>:<count>` for an inclusive linear grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl SweepRange {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|i| self.start + step * i as f64).collect()
    }
}

impl FromStr for SweepRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let usage = "expected <value> or <start>:<end>:<count>";
        let parts: Vec<&str> = s.split(':').collect();
        let parse = |v: &str| -> Result<f64, String> {
            v.parse::<f64>()
                .map_err(|_| format!("{s:?}: {v:?} is not a number; {usage}"))
        };
        match parts.as_slice() {
            [one] => {
                let v = parse(one)?;
                Ok(SweepRange {
                    start: v,
                    end: v,
                    count: 1,
                })
            }
            [start, end, count] => {
                let start = parse(start)?;
                let end = parse(end)?;
                let count: usize = count
                    .parse()
                    .map_err(|_| format!("{s:?}: count is not an integer; {usage}"))?;
                if count < 2 || end <= start {
                    return Err(format!("{s:?}: need end > start and count >= 2"));
                }
                Ok(SweepRange { start, end, count })
            }
            _ => Err(format!("{s:?}: {usage}")),
        }
    }
}

impl fmt::Display for SweepRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count == 1 {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}:{}:{}", self.start, self.end, self.count)
        }
    }
}

fn default_total_pressure() -> f64 {
    1013.25
}
fn default_temperature() -> f64 {
    288.15
}
fn default_vapor() -> f64 {
    7.5
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtmosphereConfig {
    #[serde(default = "default_total_pressure")]
    pub total_pressure_hpa: f64,
    #[serde(default = "default_temperature")]
    pub temperature_k: f64,
    #[serde(default = "default_vapor")]
    pub vapor_density_g_per_m3: f64,
}

impl Default for AtmosphereConfig {
    fn default() -> Self {
        AtmosphereConfig {
            total_pressure_hpa: default_total_pressure(),
            temperature_k: default_temperature(),
            vapor_density_g_per_m3: default_vapor(),
        }
    }
}

impl AtmosphereConfig {
    pub fn state(&self) -> ModelResult<AtmosphereState> {
        AtmosphereState::from_total_pressure(
            self.total_pressure_hpa,
            self.temperature_k,
            self.vapor_density_g_per_m3,
        )
    }
}

/// Optional JSON scenario file; every field has a model default and any
/// command-line flag overrides it.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub tx_power_dbm: Option<f64>,
    pub tx_front_end_loss_db: Option<f64>,
    pub rx_front_end_loss_db: Option<f64>,
    pub noise_figure_db: Option<f64>,
    pub bandwidth_hz: Option<f64>,
    pub aperture_side_cm: Option<f64>,
    pub effective_dielectric: Option<f64>,
    pub environment: Option<String>,
    pub fog_temperature_k: Option<f64>,
    #[serde(default)]
    pub atmosphere: Option<AtmosphereConfig>,
}

impl ScenarioConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
    }

    /// Build the radio system for one carrier, with CLI overrides already
    /// folded into `self`.
    pub fn radio_system(&self, f: Frequency, noise_figure_db: f64) -> ModelResult<RadioSystem> {
        RadioSystem::new(
            f,
            Dbm(self.tx_power_dbm.unwrap_or(45.0)),
            Db(self.tx_front_end_loss_db.unwrap_or(1.0)),
            Db(self.rx_front_end_loss_db.unwrap_or(1.0)),
            Db(noise_figure_db),
            self.bandwidth_hz.unwrap_or(100e6),
            Length::from_cm(self.aperture_side_cm.unwrap_or(10.0))?,
            self.effective_dielectric.unwrap_or(1.0),
        )
    }
}

/// Default noise figure per band: 1 dB below 10 GHz, 2 dB below 100 GHz,
/// 6.5 dB above.
pub fn default_noise_figure_db(f: Frequency) -> f64 {
    let ghz = f.ghz();
    if ghz < 10.0 {
        1.0
    } else if ghz < 100.0 {
        2.0
    } else {
        6.5
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weather_grammar() {
        assert_eq!(
            "clear".parse::<WeatherSpec>().unwrap().0,
            WeatherCondition::Clear
        );
        assert!(matches!(
            "rain:12.5".parse::<WeatherSpec>().unwrap().0,
            WeatherCondition::Rain { rate_mm_per_h, .. } if rate_mm_per_h == 12.5
        ));
        assert!("hail:3".parse::<WeatherSpec>().is_err());
        assert!("rain".parse::<WeatherSpec>().is_err());
        assert!("rain:-1".parse::<WeatherSpec>().is_err());
    }

    #[test]
    fn sweep_grammar() {
        let r: SweepRange = "0.1:10:100".parse().unwrap();
        assert_eq!(r.values().len(), 100);
        assert_eq!(r.values()[0], 0.1);
        assert_eq!(*r.values().last().unwrap(), 10.0);
        let single: SweepRange = "1500".parse().unwrap();
        assert_eq!(single.values(), vec![1500.0]);
        assert!("5:1:10".parse::<SweepRange>().is_err());
        assert!("1:2".parse::<SweepRange>().is_err());
    }
}
