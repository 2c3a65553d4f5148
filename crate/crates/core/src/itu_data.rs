//! Coefficient tables shipped with the crate as plain-text CSV files.
//!
//! Two tables are needed at runtime: the rain power-law frequency-fit
//! coefficients and the oxygen / water-vapour spectroscopic line lists.
//! Both ship under `data/` and are embedded into the binary; they can also
//! be loaded from external files with the same layout.

use crate::error::{DataError, Result};
use serde::Deserialize;
use sha2::{Digest, Sha256};
use std::path::Path;

pub const RAIN_FIT_GAUSSIAN_CSV: &str = include_str!("../data/rain_fit_gaussian.csv");
pub const RAIN_FIT_LINEAR_CSV: &str = include_str!("../data/rain_fit_linear.csv");
pub const GAS_LINES_CSV: &str = include_str!("../data/gas_lines.csv");

/// SHA-256 of the shipped `gas_lines.csv`, validated on every load.
pub const GAS_LINES_SHA256: &str =
    "18da468550e723d50846b416a7b59829ac6fd32742c7c603d541292288601614";

/// The four coefficient families of the rain power-law fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RainCoefficientFamily {
    KHorizontal,
    KVertical,
    AlphaHorizontal,
    AlphaVertical,
}

impl RainCoefficientFamily {
    pub const ALL: [RainCoefficientFamily; 4] = [
        RainCoefficientFamily::KHorizontal,
        RainCoefficientFamily::KVertical,
        RainCoefficientFamily::AlphaHorizontal,
        RainCoefficientFamily::AlphaVertical,
    ];

    fn from_label(label: &str) -> Option<Self> {
        match label {
            "kH" => Some(Self::KHorizontal),
            "kV" => Some(Self::KVertical),
            "alphaH" => Some(Self::AlphaHorizontal),
            "alphaV" => Some(Self::AlphaVertical),
            _ => None,
        }
    }

    fn expected_terms(self) -> usize {
        match self {
            Self::KHorizontal | Self::KVertical => 4,
            Self::AlphaHorizontal | Self::AlphaVertical => 5,
        }
    }

    /// The k families are fit in log10 space; the alpha families directly.
    pub fn is_log_fit(self) -> bool {
        matches!(self, Self::KHorizontal | Self::KVertical)
    }
}

/// One Gaussian term a*exp(-((log10 f - b)/c)^2) of a fit sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianTerm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Gaussian-sum-plus-linear fit for one coefficient family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyFit {
    pub terms: Vec<GaussianTerm>,
    pub slope: f64,
    pub intercept: f64,
}

/// Full rain power-law coefficient table (kH, kV, alphaH, alphaV).
#[derive(Debug, Clone, PartialEq)]
pub struct RainFitTable {
    kh: FamilyFit,
    kv: FamilyFit,
    alpha_h: FamilyFit,
    alpha_v: FamilyFit,
}

impl RainFitTable {
    pub fn family(&self, family: RainCoefficientFamily) -> &FamilyFit {
        match family {
            RainCoefficientFamily::KHorizontal => &self.kh,
            RainCoefficientFamily::KVertical => &self.kv,
            RainCoefficientFamily::AlphaHorizontal => &self.alpha_h,
            RainCoefficientFamily::AlphaVertical => &self.alpha_v,
        }
    }

    /// The table embedded in the crate.
    pub fn shipped() -> Result<Self, DataError> {
        Self::parse(
            RAIN_FIT_GAUSSIAN_CSV,
            "<embedded rain_fit_gaussian.csv>",
            RAIN_FIT_LINEAR_CSV,
            "<embedded rain_fit_linear.csv>",
        )
    }

    /// Load from external CSV files with the shipped layout.
    pub fn load(gaussian_path: &Path, linear_path: &Path) -> Result<Self, DataError> {
        let gaussian = read_file(gaussian_path)?;
        let linear = read_file(linear_path)?;
        Self::parse(
            &gaussian,
            &gaussian_path.display().to_string(),
            &linear,
            &linear_path.display().to_string(),
        )
    }

    fn parse(
        gaussian_csv: &str,
        gaussian_name: &str,
        linear_csv: &str,
        linear_name: &str,
    ) -> Result<Self, DataError> {
        #[derive(Deserialize)]
        struct GaussianRow {
            family: String,
            j: usize,
            a_j: f64,
            b_j: f64,
            c_j: f64,
        }
        #[derive(Deserialize)]
        struct LinearRow {
            family: String,
            m: f64,
            c: f64,
        }

        let mut terms: [Vec<GaussianTerm>; 4] = Default::default();
        for (idx, row) in csv_reader(gaussian_csv).deserialize().enumerate() {
            let row: GaussianRow = row.map_err(|e| bad_row(gaussian_name, idx + 1, &e))?;
            let family = RainCoefficientFamily::from_label(&row.family).ok_or_else(|| {
                DataError::BadRow {
                    path: gaussian_name.into(),
                    row: idx + 1,
                    message: format!("unknown family {:?}", row.family),
                }
            })?;
            if row.c_j == 0.0 {
                return Err(DataError::BadRow {
                    path: gaussian_name.into(),
                    row: idx + 1,
                    message: "c_j must be non-zero (it appears in a denominator)".into(),
                });
            }
            let list = &mut terms[family_index(family)];
            if row.j != list.len() + 1 {
                return Err(DataError::BadRow {
                    path: gaussian_name.into(),
                    row: idx + 1,
                    message: format!("term index {} out of order", row.j),
                });
            }
            list.push(GaussianTerm {
                a: row.a_j,
                b: row.b_j,
                c: row.c_j,
            });
        }

        let mut linear: [Option<(f64, f64)>; 4] = [None; 4];
        for (idx, row) in csv_reader(linear_csv).deserialize().enumerate() {
            let row: LinearRow = row.map_err(|e| bad_row(linear_name, idx + 1, &e))?;
            let family = RainCoefficientFamily::from_label(&row.family).ok_or_else(|| {
                DataError::BadRow {
                    path: linear_name.into(),
                    row: idx + 1,
                    message: format!("unknown family {:?}", row.family),
                }
            })?;
            linear[family_index(family)] = Some((row.m, row.c));
        }

        let mut fits = Vec::with_capacity(4);
        for family in RainCoefficientFamily::ALL {
            let idx = family_index(family);
            let list = std::mem::take(&mut terms[idx]);
            if list.len() != family.expected_terms() {
                return Err(DataError::Malformed {
                    path: gaussian_name.into(),
                    message: format!(
                        "family {:?} has {} Gaussian terms, expected {}",
                        family,
                        list.len(),
                        family.expected_terms()
                    ),
                });
            }
            let (slope, intercept) = linear[idx].ok_or_else(|| DataError::Malformed {
                path: linear_name.into(),
                message: format!("family {family:?} missing its linear term"),
            })?;
            fits.push(FamilyFit {
                terms: list,
                slope,
                intercept,
            });
        }
        let mut it = fits.into_iter();
        Ok(RainFitTable {
            kh: it.next().unwrap(),
            kv: it.next().unwrap(),
            alpha_h: it.next().unwrap(),
            alpha_v: it.next().unwrap(),
        })
    }
}

fn family_index(f: RainCoefficientFamily) -> usize {
    match f {
        RainCoefficientFamily::KHorizontal => 0,
        RainCoefficientFamily::KVertical => 1,
        RainCoefficientFamily::AlphaHorizontal => 2,
        RainCoefficientFamily::AlphaVertical => 3,
    }
}

/// One spectroscopic line: center frequency plus the six fit coefficients
/// (a1..a6 for oxygen, b1..b6 for water vapour).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub f0_ghz: f64,
    pub c: [f64; 6],
}

/// Oxygen and water-vapour line lists used by the gas attenuation model.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectroscopicLineTable {
    pub oxygen: Vec<SpectralLine>,
    pub water: Vec<SpectralLine>,
    /// Revision string from the data file header.
    pub version: String,
}

impl SpectroscopicLineTable {
    /// The table embedded in the crate, checksum-validated.
    pub fn shipped() -> Result<Self, DataError> {
        Self::parse_checked(
            GAS_LINES_CSV,
            "<embedded gas_lines.csv>",
            Some(GAS_LINES_SHA256),
        )
    }

    /// Load from an external file, optionally validating a SHA-256 checksum.
    pub fn load(path: &Path, expected_sha256: Option<&str>) -> Result<Self, DataError> {
        let text = read_file(path)?;
        Self::parse_checked(&text, &path.display().to_string(), expected_sha256)
    }

    fn parse_checked(
        text: &str,
        name: &str,
        expected_sha256: Option<&str>,
    ) -> Result<Self, DataError> {
        if let Some(expected) = expected_sha256 {
            let found = hex_sha256(text.as_bytes());
            if found != expected {
                return Err(DataError::Checksum {
                    path: name.into(),
                    expected: expected.into(),
                    found,
                });
            }
        }

        let version = text
            .lines()
            .take_while(|l| l.starts_with('#'))
            .find_map(|l| l.strip_prefix("# version:"))
            .map(|v| v.trim().to_string())
            .unwrap_or_else(|| "unversioned".into());

        #[derive(Deserialize)]
        struct LineRow {
            gas: String,
            f0_ghz: f64,
            c1: f64,
            c2: f64,
            c3: f64,
            c4: f64,
            c5: f64,
            c6: f64,
        }

        let mut oxygen = Vec::new();
        let mut water = Vec::new();
        for (idx, row) in csv_reader(text).deserialize().enumerate() {
            let row: LineRow = row.map_err(|e| bad_row(name, idx + 1, &e))?;
            if !(row.f0_ghz > 0.0) {
                return Err(DataError::BadRow {
                    path: name.into(),
                    row: idx + 1,
                    message: format!("non-positive line center {}", row.f0_ghz),
                });
            }
            let line = SpectralLine {
                f0_ghz: row.f0_ghz,
                c: [row.c1, row.c2, row.c3, row.c4, row.c5, row.c6],
            };
            match row.gas.as_str() {
                "oxygen" => oxygen.push(line),
                "water" => water.push(line),
                other => {
                    return Err(DataError::BadRow {
                        path: name.into(),
                        row: idx + 1,
                        message: format!("unknown gas {other:?}"),
                    })
                }
            }
        }

        for (gas, list) in [("oxygen", &oxygen), ("water", &water)] {
            if list.is_empty() {
                return Err(DataError::Malformed {
                    path: name.into(),
                    message: format!("no {gas} lines found"),
                });
            }
            if list.windows(2).any(|w| w[0].f0_ghz >= w[1].f0_ghz) {
                return Err(DataError::Malformed {
                    path: name.into(),
                    message: format!("{gas} line centers not strictly ascending"),
                });
            }
        }

        Ok(SpectroscopicLineTable {
            oxygen,
            water,
            version,
        })
    }
}

fn csv_reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
}

fn read_file(path: &Path) -> Result<String, DataError> {
    std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn bad_row(path: &str, row: usize, err: &csv::Error) -> DataError {
    DataError::BadRow {
        path: path.into(),
        row,
        message: err.to_string(),
    }
}

fn hex_sha256(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 of a data file on disk, for run-metadata echoes.
pub fn file_sha256(path: &Path) -> Result<String, DataError> {
    Ok(hex_sha256(read_file(path)?.as_bytes()))
}

/// Checksums of the embedded data files, for run-metadata echoes.
pub fn shipped_checksums() -> Vec<(&'static str, String)> {
    vec![
        ("rain_fit_gaussian.csv", hex_sha256(RAIN_FIT_GAUSSIAN_CSV.as_bytes())),
        ("rain_fit_linear.csv", hex_sha256(RAIN_FIT_LINEAR_CSV.as_bytes())),
        ("gas_lines.csv", hex_sha256(GAS_LINES_CSV.as_bytes())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_rain_table_counts() {
        let table = RainFitTable::shipped().unwrap();
        for family in RainCoefficientFamily::ALL {
            assert_eq!(
                table.family(family).terms.len(),
                family.expected_terms(),
                "{family:?}"
            );
        }
    }

    #[test]
    fn rain_table_rejects_missing_term() {
        let gaussian: String = RAIN_FIT_GAUSSIAN_CSV
            .lines()
            .filter(|l| !l.starts_with("kH,4"))
            .collect::<Vec<_>>()
            .join("\n");
        let err = RainFitTable::parse(&gaussian, "test", RAIN_FIT_LINEAR_CSV, "test");
        assert!(matches!(err, Err(DataError::Malformed { .. })), "{err:?}");
    }

    #[test]
    fn rain_table_rejects_zero_c() {
        let gaussian = RAIN_FIT_GAUSSIAN_CSV.replace("kH,2,-0.35351,1.26970,0.45400", "kH,2,-0.35351,1.26970,0.0");
        let err = RainFitTable::parse(&gaussian, "test", RAIN_FIT_LINEAR_CSV, "test");
        assert!(matches!(err, Err(DataError::BadRow { .. })), "{err:?}");
    }

    #[test]
    fn shipped_line_table_has_60_ghz_complex() {
        let table = SpectroscopicLineTable::shipped().unwrap();
        let in_band = table
            .oxygen
            .iter()
            .filter(|l| l.f0_ghz > 50.0 && l.f0_ghz < 70.0)
            .count();
        assert!(in_band > 10, "expected many oxygen lines in 50-70 GHz, got {in_band}");
        assert_eq!(table.version, "p676-12");
    }

    #[test]
    fn line_table_rejects_empty_and_unsorted() {
        let empty = "gas,f0_ghz,c1,c2,c3,c4,c5,c6\n";
        assert!(SpectroscopicLineTable::parse_checked(empty, "test", None).is_err());

        let unsorted = "gas,f0_ghz,c1,c2,c3,c4,c5,c6\n\
                        oxygen,60.0,1,1,1,0,0,0\n\
                        oxygen,50.0,1,1,1,0,0,0\n\
                        water,22.0,1,1,1,1,1,1\n";
        assert!(SpectroscopicLineTable::parse_checked(unsorted, "test", None).is_err());
    }

    #[test]
    fn checksum_mismatch_is_integrity_error() {
        let err = SpectroscopicLineTable::parse_checked(GAS_LINES_CSV, "test", Some("deadbeef"));
        assert!(matches!(err, Err(DataError::Checksum { .. })));
    }

    #[test]
    fn loads_are_deterministic() {
        assert_eq!(
            RainFitTable::shipped().unwrap(),
            RainFitTable::shipped().unwrap()
        );
        assert_eq!(
            SpectroscopicLineTable::shipped().unwrap(),
            SpectroscopicLineTable::shipped().unwrap()
        );
    }
}
