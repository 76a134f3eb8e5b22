//! Zero-ordinate tables: plain text, one ascending decimal ordinate per line,
//! optionally gzip-compressed.

use crate::error::{Error, Result};

use std::io::Read;
use std::path::{Path, PathBuf};

/// First zero ordinate, used to validate tables that start at the bottom.
pub const FIRST_ORDINATE: f64 = 14.134725141734694;

/// Tolerance for "t coincides with a tabulated ordinate": tabulated values
/// are inexact, so exact coincidence is widened to a 1e-9 window.
pub const ORDINATE_EPS: f64 = 1e-9;

/// Ascending positive ordinates of nontrivial zeros.
#[derive(Debug, Clone)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: PathBuf,
}

/// Loads and validates a zero table.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let raw = std::fs::read(path)?;
    let text = if raw.starts_with(&[0x1f, 0x8b]) {
        let mut s = String::new();
        flate2::read::GzDecoder::new(raw.as_slice())
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse {
                line: 0,
                msg: format!("gzip: {e}"),
            })?;
        s
    } else {
        String::from_utf8(raw).map_err(|e| Error::Parse {
            line: 0,
            msg: e.to_string(),
        })?
    };

    let mut ordinates = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line.parse().map_err(|e| Error::Parse {
            line: i + 1,
            msg: format!("{e}: {line:?}"),
        })?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("ordinates must be positive and finite, got {v}"),
            });
        }
        if let Some(&prev) = ordinates.last() {
            if v <= prev {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("ordinates must be strictly increasing: {v} after {prev}"),
                });
            }
        }
        ordinates.push(v);
    }
    if let Some(&first) = ordinates.first() {
        if (first - FIRST_ORDINATE).abs() > 1e-5 {
            return Err(Error::Parse {
                line: 1,
                msg: format!(
                    "table must start at the first ordinate {FIRST_ORDINATE} (+- 1e-5), got {first}"
                ),
            });
        }
    }
    Ok(ZeroTable {
        ordinates,
        source: path.to_path_buf(),
    })
}

impl ZeroTable {
    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn source(&self) -> &Path {
        &self.source
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    /// Largest tabulated ordinate, or an error for an empty table.
    pub fn max_ordinate(&self) -> Result<f64> {
        self.ordinates
            .last()
            .copied()
            .ok_or(Error::Coverage { t: 0.0 })
    }

    /// Requires `t` within the covered range.
    pub fn check_coverage(&self, t: f64) -> Result<()> {
        if t > self.max_ordinate().map_err(|_| Error::Coverage { t })? {
            return Err(Error::Coverage { t });
        }
        Ok(())
    }

    /// `N(t)`: number of ordinates `<= t`, with the midpoint convention —
    /// a `t` within [`ORDINATE_EPS`] of a tabulated ordinate counts it with
    /// weight one half.
    pub fn count_upto(&self, t: f64) -> f64 {
        let below = self.ordinates.partition_point(|&g| g < t - ORDINATE_EPS);
        if below < self.ordinates.len() && (self.ordinates[below] - t).abs() <= ORDINATE_EPS {
            below as f64 + 0.5
        } else {
            below as f64
        }
    }

    /// Ordinates `<= t`, ascending.
    pub fn ordinates_upto(&self, t: f64) -> &[f64] {
        let n = self.ordinates.partition_point(|&g| g <= t);
        &self.ordinates[..n]
    }
}

#[cfg(test)]
pub(crate) const TEST_ORDINATES: &str = "14.1347251417347\n21.0220396387716\n25.0108575801457\n30.4248761258595\n32.9350615877392\n37.5861781588257\n40.9187190121475\n43.3270732809150\n48.0051508811672\n49.7738324776723\n52.9703214777145\n56.4462476970634\n59.3470440026024\n60.8317785246098\n65.1125440480816\n67.0798105294942\n69.5464017111740\n72.0671576744819\n75.7046906990839\n77.1448400688748\n79.3373750202494\n82.9103808540860\n84.7354929805171\n87.4252746131252\n88.8091112076345\n92.4918992705585\n94.6513440405199\n95.8706342282453\n98.8311942181937\n101.3178510057314\n";
