//! Report emission: JSON (12 significant digits, byte-stable round trips),
//! fixed-column CSV, and a human-readable text rendering.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Rounds to 12 significant digits; all floating output goes through this so
/// that byte-identical re-serialization only depends on the f64 values.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let mag = v.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - mag);
    if factor == 0.0 || !factor.is_finite() {
        return v;
    }
    (v * factor).round() / factor
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if !n.is_i64() && !n.is_u64() {
                    if let Some(r) = serde_json::Number::from_f64(round_sig(f)) {
                        *v = Value::Number(r);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Serializes a report as a single JSON line with rounded floats.
pub fn to_json<T: Serialize>(report: &T) -> anyhow::Result<String> {
    let mut value = serde_json::to_value(report)?;
    round_value(&mut value);
    Ok(serde_json::to_string(&value)?)
}

/// One CSV cell with 12 significant digits.
pub fn csv_num(v: f64) -> String {
    format!("{:.*e}", 11, v)
}

/// Writes rows under a fixed header.
pub fn csv_table(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
