//! Sweep evaluation and deterministic rendering.
//!
//! Rows are evaluated in grid order (alpha outer, mixing angle inner) and
//! rendered with 17 significant digits and LF newlines, so repeated runs
//! of the same configuration are byte-identical.

use serde::Serialize;

use rindler_core::measures::{report, MeasureError, MeasureReport};
use rindler_core::unruh::RindlerParams;

use crate::config::{OutputFormat, SweepConfig};

/// Shortest exact-roundtrip decimal would vary in width; a fixed 17
/// significant digits keeps columns aligned and runs byte-identical.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// One evaluated grid point; a measure is `Some` iff it was requested.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub r: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negativity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub purity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coherence: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub occupation: Option<f64>,
}

impl SweepRow {
    /// Column access by canonical measure name.
    pub fn value(&self, measure: &str) -> Option<f64> {
        match measure {
            "entropy" => self.entropy,
            "negativity" => self.negativity,
            "purity" => self.purity,
            "coherence" => self.coherence,
            "occupation" => self.occupation,
            _ => None,
        }
    }
}

/// The mixing angle of row `i`: linear interpolation with both endpoints
/// emitted exactly, so the last row cannot drift past the configured stop.
pub fn grid_point(cfg: &SweepConfig, index: usize) -> f64 {
    if index == 0 {
        cfg.r_start
    } else if index + 1 == cfg.steps {
        cfg.r_stop
    } else {
        let t = index as f64 / (cfg.steps - 1) as f64;
        // Interior points are clamped so rounding in the interpolation can
        // never carry a row past the validated [r_start, r_stop] window.
        (cfg.r_start + (cfg.r_stop - cfg.r_start) * t).clamp(cfg.r_start, cfg.r_stop)
    }
}

/// Evaluates the whole grid in deterministic order.
pub fn evaluate_rows(cfg: &SweepConfig) -> Result<Vec<SweepRow>, MeasureError> {
    let wants = |name: &str| cfg.measures.iter().any(|m| m == name);
    let mut rows = Vec::with_capacity(cfg.alphas.len() * cfg.steps);
    for &alpha in &cfg.alphas {
        for i in 0..cfg.steps {
            let r = grid_point(cfg, i);
            let params = RindlerParams::new(alpha, r, cfg.phi)?;
            let rep = report(&params)?;
            rows.push(SweepRow {
                alpha,
                r,
                entropy: wants("entropy").then_some(rep.entropy),
                negativity: wants("negativity").then_some(rep.negativity),
                purity: wants("purity").then_some(rep.purity),
                coherence: wants("coherence").then_some(rep.coherence),
                occupation: wants("occupation").then_some(rep.occupation),
            });
        }
    }
    Ok(rows)
}

fn render_csv(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str("alpha,r");
    for measure in &cfg.measures {
        out.push(',');
        out.push_str(measure);
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format_number(row.alpha));
        out.push(',');
        out.push_str(&format_number(row.r));
        for measure in &cfg.measures {
            out.push(',');
            let value = row.value(measure).expect("requested column was evaluated");
            out.push_str(&format_number(value));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    config: &'a SweepConfig,
    rows: &'a [SweepRow],
}

fn render_json(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let doc = JsonDocument { config: cfg, rows };
    let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    text.push('\n');
    text
}

/// Renders rows in the configured format.
pub fn render(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    match cfg.format {
        OutputFormat::Csv => render_csv(cfg, rows),
        OutputFormat::Json => render_json(cfg, rows),
    }
}

/// Fixed-width `name = value` lines for the `measure` subcommand.
pub fn render_measure_report(rep: &MeasureReport) -> String {
    let mut out = String::new();
    for (name, value) in [
        ("alpha", rep.alpha),
        ("r", rep.r),
        ("phi", rep.phi),
        ("entropy", rep.entropy),
        ("negativity", rep.negativity),
        ("purity", rep.purity),
        ("coherence", rep.coherence),
        ("occupation", rep.occupation),
    ] {
        out.push_str(&format!("{name:<11} = {}\n", format_number(value)));
    }
    out
}

/// Report block for the `unruh` subcommand.
pub fn render_unruh_report(
    units: &str,
    mixing_angle: f64,
    temperature: f64,
    occupation: f64,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("units        = {units}\n"));
    for (name, value) in [
        ("mixing_angle", mixing_angle),
        ("temperature", temperature),
        ("occupation", occupation),
    ] {
        out.push_str(&format!("{name:<12} = {}\n", format_number(value)));
    }
    out
}
