//! Sweep configuration: defaults, a flat key-value config file, and the
//! flag > file > default merge.
//!
//! The config file is one `key = value` per line; blank lines and lines
//! starting with `#` are ignored. Keys: `alphas`, `r_start`, `r_stop`,
//! `steps`, `phi`, `measures`, `format`, `output`. List values
//! (`alphas`, `measures`) are comma-separated. Unknown keys are rejected
//! rather than ignored so typos cannot silently fall back to defaults.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use serde::Serialize;

/// Measure columns in their one canonical emission order.
pub const CANONICAL_MEASURES: [&str; 5] =
    ["entropy", "negativity", "purity", "coherence", "occupation"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputFormat::Csv => write!(f, "csv"),
            OutputFormat::Json => write!(f, "json"),
        }
    }
}

/// A fully resolved, validated sweep configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub alphas: Vec<f64>,
    pub r_start: f64,
    pub r_stop: f64,
    pub steps: usize,
    pub phi: f64,
    /// Requested columns, always in canonical order with duplicates folded.
    pub measures: Vec<String>,
    pub format: OutputFormat,
    /// Output path; `None` writes to standard output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

/// One layer of settings (flags or file), all optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PartialConfig {
    pub alphas: Option<Vec<f64>>,
    pub r_start: Option<f64>,
    pub r_stop: Option<f64>,
    pub steps: Option<usize>,
    pub phi: Option<f64>,
    pub measures: Option<Vec<String>>,
    pub format: Option<OutputFormat>,
    pub output: Option<String>,
}

impl PartialConfig {
    /// `self` wins over `fallback` field by field.
    pub fn or(self, fallback: PartialConfig) -> PartialConfig {
        PartialConfig {
            alphas: self.alphas.or(fallback.alphas),
            r_start: self.r_start.or(fallback.r_start),
            r_stop: self.r_stop.or(fallback.r_stop),
            steps: self.steps.or(fallback.steps),
            phi: self.phi.or(fallback.phi),
            measures: self.measures.or(fallback.measures),
            format: self.format.or(fallback.format),
            output: self.output.or(fallback.output),
        }
    }
}

/// Configuration errors; all are usage errors (exit code 2) except for
/// unreadable files, which the caller maps to the I/O exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    UnknownKey { key: String },
    MissingSeparator { line: String },
    BadValue { key: String, value: String },
    UnknownMeasure { name: String },
    EmptyMeasures,
    AlphaOutOfRange { value: f64 },
    MixingRangeInvalid { start: f64, stop: f64 },
    TooFewSteps { steps: usize },
    NonFinite { key: String, value: f64 },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::UnknownKey { key } => write!(f, "unknown config key `{key}`"),
            ConfigError::MissingSeparator { line } => {
                write!(f, "config line `{line}` is not of the form key = value")
            }
            ConfigError::BadValue { key, value } => {
                write!(f, "config key `{key}` cannot parse value `{value}`")
            }
            ConfigError::UnknownMeasure { name } => write!(
                f,
                "unknown measure `{name}` (expected a subset of {})",
                CANONICAL_MEASURES.join(", ")
            ),
            ConfigError::EmptyMeasures => write!(f, "at least one measure must be requested"),
            ConfigError::AlphaOutOfRange { value } => {
                write!(f, "alpha value {value} outside [0, 1]")
            }
            ConfigError::MixingRangeInvalid { start, stop } => write!(
                f,
                "mixing-angle range [{start}, {stop}] must satisfy 0 <= start <= stop <= pi/4"
            ),
            ConfigError::TooFewSteps { steps } => {
                write!(f, "steps must be at least 2, got {steps}")
            }
            ConfigError::NonFinite { key, value } => {
                write!(f, "config key `{key}` must be finite, got {value}")
            }
        }
    }
}

impl std::error::Error for ConfigError {}

/// Parses comma-separated measure names into the canonical-order subset.
pub fn parse_measures(raw: &str) -> Result<Vec<String>, ConfigError> {
    let mut requested = [false; CANONICAL_MEASURES.len()];
    for name in raw.split(',') {
        let name = name.trim();
        if name.is_empty() {
            continue;
        }
        match CANONICAL_MEASURES.iter().position(|&m| m == name) {
            Some(i) => requested[i] = true,
            None => {
                return Err(ConfigError::UnknownMeasure {
                    name: name.to_string(),
                })
            }
        }
    }
    let measures: Vec<String> = CANONICAL_MEASURES
        .iter()
        .zip(requested)
        .filter(|(_, on)| *on)
        .map(|(name, _)| name.to_string())
        .collect();
    if measures.is_empty() {
        return Err(ConfigError::EmptyMeasures);
    }
    Ok(measures)
}

fn parse_f64(key: &str, value: &str) -> Result<f64, ConfigError> {
    value.trim().parse().map_err(|_| ConfigError::BadValue {
        key: key.to_string(),
        value: value.trim().to_string(),
    })
}

/// Parses a comma-separated list of branch weights.
pub fn parse_alphas(raw: &str) -> Result<Vec<f64>, ConfigError> {
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_f64("alphas", s))
        .collect()
}

/// Parses a config-file body into one settings layer.
pub fn parse_config_text(text: &str) -> Result<PartialConfig, ConfigError> {
    let mut cfg = PartialConfig::default();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError::MissingSeparator {
                line: line.to_string(),
            })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "alphas" => cfg.alphas = Some(parse_alphas(value)?),
            "r_start" => cfg.r_start = Some(parse_f64(key, value)?),
            "r_stop" => cfg.r_stop = Some(parse_f64(key, value)?),
            "steps" => {
                cfg.steps = Some(value.parse().map_err(|_| ConfigError::BadValue {
                    key: key.to_string(),
                    value: value.to_string(),
                })?)
            }
            "phi" => cfg.phi = Some(parse_f64(key, value)?),
            "measures" => cfg.measures = Some(parse_measures(value)?),
            "format" => {
                cfg.format = Some(match value {
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    _ => {
                        return Err(ConfigError::BadValue {
                            key: key.to_string(),
                            value: value.to_string(),
                        })
                    }
                })
            }
            "output" => cfg.output = Some(value.to_string()),
            _ => {
                return Err(ConfigError::UnknownKey {
                    key: key.to_string(),
                })
            }
        }
    }
    Ok(cfg)
}

/// Applies defaults under `overrides` and validates the result.
pub fn resolve(overrides: PartialConfig) -> Result<SweepConfig, ConfigError> {
    let cfg = SweepConfig {
        alphas: overrides.alphas.unwrap_or_else(|| vec![1.0]),
        r_start: overrides.r_start.unwrap_or(0.0),
        r_stop: overrides.r_stop.unwrap_or(FRAC_PI_4),
        steps: overrides.steps.unwrap_or(50),
        phi: overrides.phi.unwrap_or(0.0),
        measures: overrides
            .measures
            .unwrap_or_else(|| CANONICAL_MEASURES.iter().map(|s| s.to_string()).collect()),
        format: overrides.format.unwrap_or(OutputFormat::Csv),
        output: overrides.output,
    };
    validate(&cfg)?;
    Ok(cfg)
}

fn validate(cfg: &SweepConfig) -> Result<(), ConfigError> {
    for &alpha in &cfg.alphas {
        if !alpha.is_finite() {
            return Err(ConfigError::NonFinite {
                key: "alphas".to_string(),
                value: alpha,
            });
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(ConfigError::AlphaOutOfRange { value: alpha });
        }
    }
    if !cfg.r_start.is_finite() || !cfg.r_stop.is_finite() {
        return Err(ConfigError::MixingRangeInvalid {
            start: cfg.r_start,
            stop: cfg.r_stop,
        });
    }
    if !(0.0..=FRAC_PI_4).contains(&cfg.r_start)
        || !(0.0..=FRAC_PI_4).contains(&cfg.r_stop)
        || cfg.r_start > cfg.r_stop
    {
        return Err(ConfigError::MixingRangeInvalid {
            start: cfg.r_start,
            stop: cfg.r_stop,
        });
    }
    if cfg.steps < 2 {
        return Err(ConfigError::TooFewSteps { steps: cfg.steps });
    }
    if !cfg.phi.is_finite() {
        return Err(ConfigError::NonFinite {
            key: "phi".to_string(),
            value: cfg.phi,
        });
    }
    if cfg.measures.is_empty() {
        return Err(ConfigError::EmptyMeasures);
    }
    Ok(())
}
