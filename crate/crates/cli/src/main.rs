//! Command-line sweeps over the propagation and link-budget models.
//!
//! Every subcommand emits one rectangular table (CSV or JSON) with a unit
//! row and a metadata header that echoes the full invocation, so runs are
//! reproducible from their own output.
//!
//! Exit codes: 0 success, 2 usage error, 3 model-domain error, 4 data-file
//! error.

mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use output::{Cell, OutputFormat, SweepTable};
use scenario::{default_noise_figure_db, ScenarioConfig, SweepRange, WeatherSpec};
use uavprop::a2g::{
    aerial_path_loss_weather, elevation_angle_deg, los_nlos_path_loss, los_probability,
    A2GEnvironment,
};
use uavprop::coverage::{coverage_radius, max_path_loss, RadiusSolution};
use uavprop::error::ModelError;
use uavprop::gas::{gas_specific_attenuation, AtmosphereState};
use uavprop::itu_data::{shipped_checksums, RainFitTable, SpectroscopicLineTable};
use uavprop::link_budget::{
    array_design, effective_wavelength, noise_power, received_power, snr,
};
use uavprop::propagation::path_loss_mw;
use uavprop::quantities::{slant_distance, AttenuationRate, Db, Frequency, Length};
use uavprop::weather::{PolarizationGeometry, WeatherCondition};

#[derive(Parser)]
#[command(name = "uavprop", version, about = "Weather-aware UAV link modeling sweeps")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Write the table to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// JSON scenario file with radio-system / atmosphere defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Comma-separated list of carrier frequencies in GHz.
#[derive(Debug, Clone)]
struct FreqList(Vec<f64>);

impl FromStr for FreqList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        for part in s.split(',') {
            let v: f64 = part
                .trim()
                .parse()
                .map_err(|_| format!("{part:?} is not a frequency in GHz"))?;
            if !(v.is_finite() && v > 0.0) {
                return Err(format!("frequency must be positive, got {v} GHz"));
            }
            values.push(v);
        }
        if values.is_empty() {
            return Err("empty frequency list".into());
        }
        Ok(FreqList(values))
    }
}

impl std::fmt::Display for FreqList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Args, Debug, Clone)]
struct WeatherIntensities {
    /// Rain rate, mm/h.
    #[arg(long, default_value_t = 12.5)]
    rain: f64,

    /// Fog liquid-water density, g/m^3.
    #[arg(long, default_value_t = 0.05)]
    fog: f64,

    /// Snowfall rate, mm/h.
    #[arg(long, default_value_t = 5.0)]
    snow: f64,

    /// Evaluate the dry-snow formula above its default frequency ceiling.
    #[arg(long)]
    allow_snow_extrapolation: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Multi-weather line-of-sight path loss versus distance.
    Atten {
        /// Carrier frequencies, GHz (comma separated).
        #[arg(long)]
        freq: FreqList,

        /// Distance sweep, km.
        #[arg(long, default_value = "0.1:10:100")]
        dist: SweepRange,

        #[command(flatten)]
        weather: WeatherIntensities,
    },

    /// Gaseous specific attenuation versus frequency.
    Gas {
        /// Frequency sweep, GHz.
        #[arg(long, default_value = "1:1000:1000")]
        freq: SweepRange,
    },

    /// Line-of-sight path loss for one weather condition.
    Pathloss {
        #[arg(long)]
        freq: FreqList,

        /// Distance sweep, km.
        #[arg(long, default_value = "0.1:10:100")]
        dist: SweepRange,

        /// Weather condition (clear | rain:<mm/h> | fog:<g/m3> | snow:<mm/h>).
        #[arg(long, default_value = "clear")]
        weather: WeatherSpec,

        #[arg(long)]
        allow_snow_extrapolation: bool,
    },

    /// Air-to-ground path loss versus ground radius at fixed altitude.
    A2g {
        /// Carrier frequency, GHz.
        #[arg(long)]
        freq: f64,

        /// UAV altitude, m.
        #[arg(long)]
        alt: f64,

        /// Ground radius sweep, m.
        #[arg(long, default_value = "10:10000:100")]
        radius: SweepRange,

        /// Environment preset label.
        #[arg(long, default_value = "urban")]
        env: String,

        #[arg(long, default_value = "clear")]
        weather: WeatherSpec,

        #[arg(long)]
        allow_snow_extrapolation: bool,
    },

    /// Coverage radius versus UAV altitude under clear / rain / fog / snow.
    Coverage {
        /// Carrier frequency, GHz.
        #[arg(long)]
        freq: f64,

        /// Altitude sweep, m.
        #[arg(long, default_value = "10:5000:500")]
        alt: SweepRange,

        /// Environment preset label.
        #[arg(long, default_value = "urban")]
        env: String,

        /// Minimum tolerable SNR, dB; the path-loss threshold is derived
        /// from the link budget at this floor.
        #[arg(long, default_value_t = 10.0)]
        snr_min: f64,

        /// Override the derived path-loss threshold, dB.
        #[arg(long)]
        pl_max: Option<f64>,

        #[command(flatten)]
        weather: WeatherIntensities,
    },

    /// Received power, noise and SNR versus distance.
    Linkbudget {
        #[arg(long)]
        freq: FreqList,

        /// Distance sweep, m.
        #[arg(long, default_value = "100:5000:50")]
        dist: SweepRange,

        /// Weather conditions (repeatable).
        #[arg(long, default_values = ["clear"])]
        weather: Vec<WeatherSpec>,

        /// Path-loss model: line-of-sight multi-weather (mw) or
        /// air-to-ground (a2g; distance is interpreted as ground radius).
        #[arg(long, default_value = "mw")]
        model: String,

        /// UAV altitude for the a2g model, m.
        #[arg(long, default_value_t = 100.0)]
        alt: f64,

        /// Environment preset for the a2g model.
        #[arg(long, default_value = "urban")]
        env: String,

        #[arg(long)]
        allow_snow_extrapolation: bool,
    },

    /// Fixed-aperture array sizing and gain per carrier.
    Array {
        #[arg(long)]
        freq: FreqList,
    },
}

enum CliError {
    Usage(String),
    Model(ModelError),
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Model(e)
    }
}

impl From<String> for CliError {
    fn from(e: String) -> Self {
        CliError::Usage(e)
    }
}

struct ModelContext {
    rain_table: RainFitTable,
    lines: SpectroscopicLineTable,
    atmosphere: AtmosphereState,
    config: ScenarioConfig,
}

impl ModelContext {
    fn new(config: ScenarioConfig) -> Result<Self, CliError> {
        let rain_table = RainFitTable::shipped().map_err(ModelError::from)?;
        let lines = SpectroscopicLineTable::shipped().map_err(ModelError::from)?;
        let atmosphere = config.atmosphere.clone().unwrap_or_default().state()?;
        Ok(ModelContext {
            rain_table,
            lines,
            atmosphere,
            config,
        })
    }

    fn beta(&self, f: Frequency) -> Result<AttenuationRate, CliError> {
        Ok(gas_specific_attenuation(f, &self.atmosphere, &self.lines)?.total)
    }

    fn gamma(
        &self,
        f: Frequency,
        condition: &WeatherCondition,
        allow_snow_extrapolation: bool,
    ) -> Result<AttenuationRate, CliError> {
        let condition = self.with_fog_temperature(*condition);
        Ok(condition.specific_attenuation(f, &self.rain_table, allow_snow_extrapolation)?)
    }

    fn with_fog_temperature(&self, condition: WeatherCondition) -> WeatherCondition {
        match (condition, self.config.fog_temperature_k) {
            (
                WeatherCondition::Fog {
                    liquid_water_g_per_m3,
                    ..
                },
                Some(t),
            ) => WeatherCondition::Fog {
                liquid_water_g_per_m3,
                temperature_k: t,
            },
            (other, _) => other,
        }
    }

    fn environment(&self, label: &str) -> Result<A2GEnvironment, CliError> {
        let label = self
            .config
            .environment
            .clone()
            .unwrap_or_else(|| label.to_string());
        Ok(A2GEnvironment::preset(&label)?)
    }

    fn stamp(&self, table: &mut SweepTable, command_echo: &str) {
        table.meta("tool", format!("uavprop {}", env!("CARGO_PKG_VERSION")));
        table.meta("command", command_echo);
        for (name, sha) in shipped_checksums() {
            table.meta(&format!("data {name}"), sha);
        }
        table.meta(
            "atmosphere",
            format!(
                "dry={} hPa T={} K vapor={} g/m3",
                self.atmosphere.dry_pressure_hpa,
                self.atmosphere.temperature_k,
                self.atmosphere.vapor_density_g_per_m3
            ),
        );
    }
}

fn weather_conditions(w: &WeatherIntensities) -> Vec<(&'static str, WeatherCondition)> {
    vec![
        ("clear", WeatherCondition::Clear),
        (
            "rain",
            WeatherCondition::Rain {
                rate_mm_per_h: w.rain,
                geometry: PolarizationGeometry::circular(),
            },
        ),
        (
            "fog",
            WeatherCondition::Fog {
                liquid_water_g_per_m3: w.fog,
                temperature_k: uavprop::weather::DEFAULT_FOG_TEMPERATURE_K,
            },
        ),
        ("snow", WeatherCondition::DrySnow { rate_mm_per_h: w.snow }),
    ]
}

fn run_atten(
    ctx: &ModelContext,
    freq: &FreqList,
    dist: &SweepRange,
    weather: &WeatherIntensities,
) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(
        vec![
            "freq_ghz",
            "distance_km",
            "pl_clear_db",
            "pl_rain_db",
            "pl_fog_db",
            "pl_snow_db",
        ],
        vec!["GHz", "km", "dB", "dB", "dB", "dB"],
    );
    ctx.stamp(
        &mut table,
        &format!(
            "atten --freq {} --dist {} --rain {} --fog {} --snow {}{}",
            freq, dist, weather.rain, weather.fog, weather.snow,
            if weather.allow_snow_extrapolation {
                " --allow-snow-extrapolation"
            } else {
                ""
            }
        ),
    );
    let conditions = weather_conditions(weather);
    for &f_ghz in &freq.0 {
        let f = Frequency::from_ghz(f_ghz)?;
        let beta = ctx.beta(f)?;
        let gammas: Vec<AttenuationRate> = conditions
            .iter()
            .map(|(_, c)| ctx.gamma(f, c, weather.allow_snow_extrapolation))
            .collect::<Result<_, _>>()?;
        for d_km in dist.values() {
            let d = Length::from_km(d_km)?;
            let mut row: Vec<Cell> = vec![f_ghz.into(), d_km.into()];
            for gamma in &gammas {
                row.push(path_loss_mw(f, d, beta, *gamma)?.total().db().into());
            }
            table.push(row);
        }
    }
    Ok(table)
}

fn run_gas(ctx: &ModelContext, freq: &SweepRange) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(
        vec!["freq_ghz", "beta_oxygen", "beta_water", "beta_total"],
        vec!["GHz", "dB/km", "dB/km", "dB/km"],
    );
    ctx.stamp(&mut table, &format!("gas --freq {freq}"));
    for f_ghz in freq.values() {
        let b = gas_specific_attenuation(
            Frequency::from_ghz(f_ghz)?,
            &ctx.atmosphere,
            &ctx.lines,
        )?;
        table.push(vec![
            f_ghz.into(),
            b.oxygen.db_per_km().into(),
            b.water_vapour.db_per_km().into(),
            b.total.db_per_km().into(),
        ]);
    }
    Ok(table)
}

fn run_pathloss(
    ctx: &ModelContext,
    freq: &FreqList,
    dist: &SweepRange,
    weather: &WeatherSpec,
    allow_snow_extrapolation: bool,
) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(
        vec![
            "freq_ghz",
            "distance_km",
            "beta",
            "gamma",
            "pl_free_space_db",
            "pl_total_db",
        ],
        vec!["GHz", "km", "dB/km", "dB/km", "dB", "dB"],
    );
    ctx.stamp(
        &mut table,
        &format!(
            "pathloss --freq {} --dist {} --weather {}{}",
            freq, dist, weather,
            if allow_snow_extrapolation {
                " --allow-snow-extrapolation"
            } else {
                ""
            }
        ),
    );
    for &f_ghz in &freq.0 {
        let f = Frequency::from_ghz(f_ghz)?;
        let beta = ctx.beta(f)?;
        let gamma = ctx.gamma(f, &weather.0, allow_snow_extrapolation)?;
        for d_km in dist.values() {
            let pl = path_loss_mw(f, Length::from_km(d_km)?, beta, gamma)?;
            table.push(vec![
                f_ghz.into(),
                d_km.into(),
                beta.db_per_km().into(),
                gamma.db_per_km().into(),
                pl.free_space_db.into(),
                pl.total().db().into(),
            ]);
        }
    }
    Ok(table)
}

#[allow(clippy::too_many_arguments)]
fn run_a2g(
    ctx: &ModelContext,
    freq_ghz: f64,
    alt_m: f64,
    radius: &SweepRange,
    env_label: &str,
    weather: &WeatherSpec,
    allow_snow_extrapolation: bool,
) -> Result<SweepTable, CliError> {
    let f = Frequency::from_ghz(freq_ghz)?;
    let env = ctx.environment(env_label)?;
    let beta = ctx.beta(f)?;
    let gamma = ctx.gamma(f, &weather.0, allow_snow_extrapolation)?;
    let h = Length::from_m(alt_m)?;

    let mut table = SweepTable::new(
        vec![
            "h_m",
            "r_m",
            "elevation_deg",
            "p_los",
            "pl_los_db",
            "pl_nlos_db",
            "pl_aerial_db",
        ],
        vec!["m", "m", "deg", "1", "dB", "dB", "dB"],
    );
    ctx.stamp(
        &mut table,
        &format!(
            "a2g --freq {freq_ghz} --alt {alt_m} --radius {radius} --env {} --weather {weather}",
            env.label
        ),
    );
    table.meta(
        "environment",
        format!(
            "{} a={} b={} eta_los={} dB eta_nlos={} dB",
            env.label, env.a, env.b, env.eta_los_db, env.eta_nlos_db
        ),
    );
    for r_m in radius.values() {
        let r = Length::from_m(r_m)?;
        let d = slant_distance(h, r)?;
        let split = los_probability(h, r, &env)?;
        let (pl_los, pl_nlos) = los_nlos_path_loss(f, d, &env)?;
        let pl = aerial_path_loss_weather(h, r, f, &env, beta, gamma)?;
        table.push(vec![
            alt_m.into(),
            r_m.into(),
            elevation_angle_deg(h, r).into(),
            split.p_los.into(),
            pl_los.db().into(),
            pl_nlos.db().into(),
            pl.db().into(),
        ]);
    }
    Ok(table)
}

#[allow(clippy::too_many_arguments)]
fn run_coverage(
    ctx: &ModelContext,
    freq_ghz: f64,
    alt: &SweepRange,
    env_label: &str,
    snr_min: f64,
    pl_max_override: Option<f64>,
    weather: &WeatherIntensities,
) -> Result<SweepTable, CliError> {
    let f = Frequency::from_ghz(freq_ghz)?;
    let env = ctx.environment(env_label)?;
    let beta = ctx.beta(f)?;
    let nf = ctx
        .config
        .noise_figure_db
        .unwrap_or_else(|| default_noise_figure_db(f));
    let sys = ctx.config.radio_system(f, nf)?;
    let design = array_design(f, sys.aperture_side, sys.effective_dielectric)?;
    let gain = design.gain();
    let pl_max = match pl_max_override {
        Some(v) => Db(v),
        None => max_path_loss(&sys, gain, gain, Db(snr_min))?,
    };

    let mut table = SweepTable::new(
        vec![
            "h_m",
            "radius_clear_m",
            "radius_rain_m",
            "radius_fog_m",
            "radius_snow_m",
            "status",
        ],
        vec!["m", "m", "m", "m", "m", "-"],
    );
    ctx.stamp(
        &mut table,
        &format!(
            "coverage --freq {freq_ghz} --alt {alt} --env {} --snr-min {snr_min}{} --rain {} --fog {} --snow {}{}",
            env.label,
            pl_max_override
                .map(|v| format!(" --pl-max {v}"))
                .unwrap_or_default(),
            weather.rain,
            weather.fog,
            weather.snow,
            if weather.allow_snow_extrapolation {
                " --allow-snow-extrapolation"
            } else {
                ""
            }
        ),
    );
    table.meta(
        "environment",
        format!(
            "{} a={} b={} eta_los={} dB eta_nlos={} dB",
            env.label, env.a, env.b, env.eta_los_db, env.eta_nlos_db
        ),
    );
    table.meta(
        "array",
        format!(
            "n_side={} n_elements={} gain_db={:.2}",
            design.n_side,
            design.n_elements,
            gain.db()
        ),
    );
    table.meta("pl_max_db", format!("{:.4}", pl_max.db()));

    // Snow outside its validity window is omitted (empty column) rather
    // than failing the whole sweep, unless extrapolation is requested.
    let conditions = weather_conditions(weather);
    let mut gammas: Vec<Option<AttenuationRate>> = Vec::new();
    for (label, c) in &conditions {
        match ctx.gamma(f, c, weather.allow_snow_extrapolation) {
            Ok(g) => gammas.push(Some(g)),
            Err(CliError::Model(ModelError::OutOfRange { .. }))
                if *label == "snow" && !weather.allow_snow_extrapolation =>
            {
                table.meta("note", "snow column omitted: frequency outside model validity");
                gammas.push(None);
            }
            Err(e) => return Err(e),
        }
    }
    for h_m in alt.values() {
        let h = Length::from_m(h_m)?;
        let mut row: Vec<Cell> = vec![h_m.into()];
        let mut notes: Vec<String> = Vec::new();
        for ((label, _), gamma) in conditions.iter().zip(&gammas) {
            let Some(gamma) = gamma else {
                row.push("".into());
                continue;
            };
            match coverage_radius(h, pl_max, f, &env, beta, *gamma)? {
                RadiusSolution::Solved(p) => row.push(p.radius.m().into()),
                RadiusSolution::Unreachable => {
                    row.push("".into());
                    notes.push(format!("{label}=unreachable"));
                }
                RadiusSolution::Unbounded { radius_cap } => {
                    row.push("".into());
                    notes.push(format!("{label}=unbounded>{}m", radius_cap.m()));
                }
            }
        }
        let status = if notes.is_empty() { "ok".to_string() } else { notes.join(";") };
        row.push(Cell::Text(status));
        table.push(row);
    }
    Ok(table)
}

#[allow(clippy::too_many_arguments)]
fn run_linkbudget(
    ctx: &ModelContext,
    freq: &FreqList,
    dist: &SweepRange,
    weather: &[WeatherSpec],
    model: &str,
    alt_m: f64,
    env_label: &str,
    allow_snow_extrapolation: bool,
) -> Result<SweepTable, CliError> {
    if model != "mw" && model != "a2g" {
        return Err(CliError::Usage(format!(
            "unknown path-loss model {model:?} (expected mw or a2g)"
        )));
    }
    let mut table = SweepTable::new(
        vec![
            "freq_ghz",
            "weather",
            "distance_m",
            "pl_db",
            "pr_dbm",
            "noise_dbm",
            "snr_db",
        ],
        vec!["GHz", "-", "m", "dB", "dBm", "dBm", "dB"],
    );
    let weather_echo: Vec<String> = weather.iter().map(|w| format!("--weather {w}")).collect();
    ctx.stamp(
        &mut table,
        &format!(
            "linkbudget --freq {} --dist {} {} --model {}{}{}",
            freq,
            dist,
            weather_echo.join(" "),
            model,
            if model == "a2g" {
                format!(" --alt {alt_m} --env {env_label}")
            } else {
                String::new()
            },
            if allow_snow_extrapolation {
                " --allow-snow-extrapolation"
            } else {
                ""
            }
        ),
    );

    let env = if model == "a2g" {
        Some(ctx.environment(env_label)?)
    } else {
        None
    };

    for &f_ghz in &freq.0 {
        let f = Frequency::from_ghz(f_ghz)?;
        let nf = ctx
            .config
            .noise_figure_db
            .unwrap_or_else(|| default_noise_figure_db(f));
        let sys = ctx.config.radio_system(f, nf)?;
        let design = array_design(f, sys.aperture_side, sys.effective_dielectric)?;
        let gain = design.gain();
        table.meta(
            &format!("array {f_ghz}GHz"),
            format!(
                "n_side={} n_elements={} gain_db={:.2} noise_figure_db={}",
                design.n_side,
                design.n_elements,
                gain.db(),
                sys.noise_figure.db()
            ),
        );
        let noise = noise_power(&sys)?;
        let beta = ctx.beta(f)?;
        for spec in weather {
            let gamma = ctx.gamma(f, &spec.0, allow_snow_extrapolation)?;
            for d_m in dist.values() {
                let pl = match &env {
                    None => path_loss_mw(f, Length::from_m(d_m)?, beta, gamma)?.total(),
                    Some(env) => aerial_path_loss_weather(
                        Length::from_m(alt_m)?,
                        Length::from_m(d_m)?,
                        f,
                        env,
                        beta,
                        gamma,
                    )?,
                };
                let pr = received_power(&sys, gain, gain, pl)?;
                let s = snr(pr, noise);
                table.push(vec![
                    f_ghz.into(),
                    Cell::Text(spec.to_string()),
                    d_m.into(),
                    pl.db().into(),
                    pr.dbm().into(),
                    noise.dbm().into(),
                    s.db().into(),
                ]);
            }
        }
    }
    Ok(table)
}

fn run_array(ctx: &ModelContext, freq: &FreqList) -> Result<SweepTable, CliError> {
    let mut table = SweepTable::new(
        vec![
            "freq_ghz",
            "lambda_mm",
            "lambda_e_mm",
            "n_side",
            "n_elements",
            "gain_db",
        ],
        vec!["GHz", "mm", "mm", "1", "1", "dB"],
    );
    ctx.stamp(&mut table, &format!("array --freq {freq}"));
    let aperture = Length::from_cm(ctx.config.aperture_side_cm.unwrap_or(10.0))
        .map_err(ModelError::from)?;
    let eps = ctx.config.effective_dielectric.unwrap_or(1.0);
    table.meta("aperture_cm", aperture.cm());
    table.meta("effective_dielectric", eps);
    for &f_ghz in &freq.0 {
        let f = Frequency::from_ghz(f_ghz)?;
        let design = array_design(f, aperture, eps)?;
        table.push(vec![
            f_ghz.into(),
            (f.wavelength().m() * 1e3).into(),
            (effective_wavelength(f, eps)?.m() * 1e3).into(),
            (design.n_side as f64).into(),
            (design.n_elements as f64).into(),
            design.gain().db().into(),
        ]);
    }
    Ok(table)
}

fn run(cli: &Cli) -> Result<SweepTable, CliError> {
    let config = match &cli.config {
        Some(path) => ScenarioConfig::load(path)?,
        None => ScenarioConfig::default(),
    };
    let ctx = ModelContext::new(config)?;
    match &cli.command {
        Command::Atten { freq, dist, weather } => run_atten(&ctx, freq, dist, weather),
        Command::Gas { freq } => run_gas(&ctx, freq),
        Command::Pathloss {
            freq,
            dist,
            weather,
            allow_snow_extrapolation,
        } => run_pathloss(&ctx, freq, dist, weather, *allow_snow_extrapolation),
        Command::A2g {
            freq,
            alt,
            radius,
            env,
            weather,
            allow_snow_extrapolation,
        } => run_a2g(&ctx, *freq, *alt, radius, env, weather, *allow_snow_extrapolation),
        Command::Coverage {
            freq,
            alt,
            env,
            snr_min,
            pl_max,
            weather,
        } => run_coverage(&ctx, *freq, alt, env, *snr_min, *pl_max, weather),
        Command::Linkbudget {
            freq,
            dist,
            weather,
            model,
            alt,
            env,
            allow_snow_extrapolation,
        } => run_linkbudget(
            &ctx,
            freq,
            dist,
            weather,
            model,
            *alt,
            env,
            *allow_snow_extrapolation,
        ),
        Command::Array { freq } => run_array(&ctx, freq),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(table) => {
            let text = table.render(cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(4);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Model(ModelError::Data(e))) => {
            eprintln!("data error: {e}");
            ExitCode::from(4)
        }
        Err(CliError::Model(e)) => {
            eprintln!("model error: {e}");
            ExitCode::from(3)
        }
    }
}
