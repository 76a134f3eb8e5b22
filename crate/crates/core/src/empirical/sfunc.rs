//! `S(t)` and `S1(t)` reconstructed from a zero table.
//!
//! `S(t) = N(t) - theta(t)/pi - 1` is exact given a trusted table: the only
//! inexactness is the asymptotic theta, carried as an explicit band. `S1` is
//! integrated piecewise-exactly: `N` is constant between ordinates, so
//!
//! ```text
//! S1(t) = sum_{gamma <= t} (t - gamma) - t - (1/pi) int_0^t theta(u) du
//! ```
//!
//! with the theta integral in closed form.

use super::theta::{rs_theta, theta_integral};
use super::zeros::ZeroTable;
use crate::error::{Error, Result};
use crate::primes::KahanSum;

use std::f64::consts::PI;

/// A value with an explicit uncertainty band.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Banded {
    pub value: f64,
    pub band: f64,
}

/// Residual allowance of the zero-counting formula, `|R(t)| <= 1/(150 t)`,
/// plus the asymptotic-theta error allowance.
fn r_band(t: f64) -> f64 {
    1.0 / (150.0 * t) + 1e-6
}

/// `S(t)` from the table, for `10 <= t <=` the table's last ordinate.
/// At a tabulated ordinate the midpoint convention applies (the jump counts
/// with weight one half).
pub fn s_of_t(z: &ZeroTable, t: f64) -> Result<Banded> {
    if !(t >= 10.0) {
        return Err(Error::domain(format!("s_of_t requires t >= 10, got {t}")));
    }
    z.check_coverage(t)?;
    let n = z.count_upto(t);
    Ok(Banded {
        value: n - rs_theta(t)? / PI - 1.0,
        band: r_band(t),
    })
}

/// `S1(t) = int_0^t S(u) du`, piecewise-exact, for `0 <= t <=` the table's
/// last ordinate.
pub fn s1_of_t(z: &ZeroTable, t: f64) -> Result<Banded> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!("s1_of_t requires t >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(Banded {
            value: 0.0,
            band: 0.0,
        });
    }
    z.check_coverage(t)?;
    let mut zero_part = KahanSum::new();
    for &g in z.ordinates_upto(t) {
        zero_part.add(t - g);
    }
    let value = zero_part.value() - t - theta_integral(t)? / PI;
    // The R-term accumulates only where the asymptotic theta is in play.
    let band = if t > 10.0 {
        (t / 10.0).ln() / 150.0 + 1e-6
    } else {
        1e-9
    };
    Ok(Banded { value, band })
}
