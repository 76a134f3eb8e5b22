//! The two integral bounds behind the prime-sum estimates:
//!
//! ```text
//! (log^3 x / sqrt(x)) * int_2^x dy / (sqrt(y) log^3 y)  <=  23.1
//! (log^4 x / sqrt(x)) * int_2^x dy / (sqrt(y) log^4 y)  <= 132.6
//! ```
//!
//! both for all `x >= 2`, checked here by quadrature at desk scale and by
//! their closed-form parametric majorant beyond it.

use super::adaptive::{adaptive_integral, IntegralResult};
use crate::error::{Error, Result};

use std::f64::consts::LN_2;

/// `lemma31` constant.
pub const LEMMA31_CONSTANT: f64 = 23.1;
/// `lemma32` constant.
pub const LEMMA32_CONSTANT: f64 = 132.6;

/// The cutoff choice `log x0 = (23/2)^{1/3} log 2` that pins the parametric
/// majorant of `lemma31` at `2 * (23/2) = 23` plus a decaying term.
pub fn lemma31_x0_choice() -> f64 {
    ((23.0f64 / 2.0).cbrt() * LN_2).exp()
}

/// The cutoff choice `log x0 = (132/2)^{1/4} log 2` for `lemma32`.
pub fn lemma32_x0_choice() -> f64 {
    ((132.0f64 / 2.0).powf(0.25) * LN_2).exp()
}

fn lhs_pow(x: f64, k: i32, tol: f64) -> Result<IntegralResult> {
    if !(x > 2.0) {
        return Err(Error::domain(format!("lemma lhs requires x > 2, got {x}")));
    }
    // Substitution u = log y flattens the integrand to e^{u/2} / u^k.
    let r = adaptive_integral(|u: f64| (0.5 * u).exp() / u.powi(k), LN_2, x.ln(), tol)?;
    let scale = x.ln().powi(k) / x.sqrt();
    Ok(IntegralResult {
        value: scale * r.value,
        error_estimate: scale * r.error_estimate,
        subdivisions: r.subdivisions,
    })
}

/// `(log^3 x / sqrt(x)) int_2^x dy/(sqrt(y) log^3 y)` by adaptive quadrature.
pub fn lemma31_lhs(x: f64, tol: f64) -> Result<f64> {
    Ok(lhs_pow(x, 3, tol)?.value)
}

/// `(log^4 x / sqrt(x)) int_2^x dy/(sqrt(y) log^4 y)` by adaptive quadrature.
pub fn lemma32_lhs(x: f64, tol: f64) -> Result<f64> {
    Ok(lhs_pow(x, 4, tol)?.value)
}

fn parametric_rhs(x: f64, x0: f64, k: i32) -> Result<f64> {
    if !(2.0 <= x0 && x0 <= x) {
        return Err(Error::domain(format!(
            "parametric bound requires 2 <= x0 <= x, got x0 = {x0}, x = {x}"
        )));
    }
    let lx = x.ln();
    let lx0 = x0.ln();
    let first = 2.0 * (lx0 / LN_2).powi(k);
    let second = 2.0 / LN_2.powi(k) * (-0.5 * (1.0 - LN_2 / lx0) * lx).exp() * lx.powi(k);
    Ok(first + second)
}

/// Closed-form majorant `2 (log x0 / log 2)^3
/// + (2/log^3 2) x^{-(1/2)(1 - log 2/log x0)} log^3 x` of the `lemma31` LHS.
pub fn lemma31_parametric_rhs(x: f64, x0: f64) -> Result<f64> {
    parametric_rhs(x, x0, 3)
}

/// The fourth-power analogue for `lemma32`.
pub fn lemma32_parametric_rhs(x: f64, x0: f64) -> Result<f64> {
    parametric_rhs(x, x0, 4)
}

/// One grid point of a lemma scan.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct LemmaScanRow {
    pub x: f64,
    pub lhs: f64,
    pub limit: f64,
    pub pass: bool,
}

#[derive(Debug, serde::Serialize)]
pub struct LemmaScanReport {
    pub rows: Vec<LemmaScanRow>,
    pub max_lhs: f64,
    pub all_pass: bool,
}

/// Scans the quadrature LHS of `lemma31` (k = 3) or `lemma32` (k = 4) over an
/// ascending grid, reusing the integral prefix between consecutive points.
pub fn scan_lemma_lhs(k: i32, grid: &[f64], tol: f64) -> Result<LemmaScanReport> {
    let limit = match k {
        3 => LEMMA31_CONSTANT,
        4 => LEMMA32_CONSTANT,
        _ => return Err(Error::domain("lemma scans exist for k = 3 and k = 4 only")),
    };
    let mut rows = Vec::with_capacity(grid.len());
    let mut prev_u = LN_2;
    let mut acc = 0.0;
    let mut max_lhs = f64::NEG_INFINITY;
    for &x in grid {
        if !(x > 2.0) {
            return Err(Error::domain(format!(
                "lemma scan grid requires x > 2, got {x}"
            )));
        }
        let u = x.ln();
        if u < prev_u {
            return Err(Error::domain("lemma scan grid must be ascending"));
        }
        acc += adaptive_integral(|v: f64| (0.5 * v).exp() / v.powi(k), prev_u, u, tol)?.value;
        prev_u = u;
        let lhs = u.powi(k) / x.sqrt() * acc;
        max_lhs = max_lhs.max(lhs);
        rows.push(LemmaScanRow {
            x,
            lhs,
            limit,
            pass: lhs <= limit,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(LemmaScanReport {
        rows,
        max_lhs,
        all_pass,
    })
}

/// Scans the closed-form parametric majorant with the pinned `x0` choice over
/// an `x` grid (given as `log10 x` to reach `10^100` comfortably).
pub fn scan_lemma_parametric(k: i32, grid_log10: &[f64]) -> Result<LemmaScanReport> {
    let (limit, x0) = match k {
        3 => (LEMMA31_CONSTANT, lemma31_x0_choice()),
        4 => (LEMMA32_CONSTANT, lemma32_x0_choice()),
        _ => return Err(Error::domain("lemma scans exist for k = 3 and k = 4 only")),
    };
    let lx0 = x0.ln();
    let mut rows = Vec::with_capacity(grid_log10.len());
    let mut max_lhs = f64::NEG_INFINITY;
    for &x10 in grid_log10 {
        let lx = x10 * std::f64::consts::LN_10;
        // Same expression as the pointwise parametric rhs, in log space.
        let first = 2.0 * (lx0 / LN_2).powi(k);
        let second = 2.0 / LN_2.powi(k) * (-0.5 * (1.0 - LN_2 / lx0) * lx).exp() * lx.powi(k);
        let rhs = first + second;
        max_lhs = max_lhs.max(rhs);
        rows.push(LemmaScanRow {
            x: x10,
            lhs: rhs,
            limit,
            pass: rhs <= limit,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(LemmaScanReport {
        rows,
        max_lhs,
        all_pass,
    })
}
