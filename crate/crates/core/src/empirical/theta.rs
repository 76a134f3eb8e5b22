//! Riemann–Siegel theta: the phase whose value gives the smooth part of the
//! zero count via `N(t) = theta(t)/pi + 1 + S(t)`.

use crate::error::{Error, Result};
use crate::quadrature::adaptive_integral;

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Asymptotic theta,
/// `t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)`,
/// absolute error below `1e-8` for `t >= 10`.
pub fn rs_theta(t: f64) -> Result<f64> {
    if !(t >= 10.0) {
        return Err(Error::domain(format!(
            "the asymptotic theta expansion requires t >= 10, got {t}"
        )));
    }
    Ok(rs_theta_unchecked(t))
}

#[inline]
fn rs_theta_unchecked(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t * t)
}

/// Exact theta for small arguments, via the log-gamma definition
/// `theta(t) = Im ln Gamma(1/4 + it/2) - (t/2) ln pi`.
pub fn theta_small(t: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * t);
    ln_gamma(z).im - 0.5 * t * PI.ln()
}

/// Lanczos approximation to `ln Gamma(z)` for `Re z > 0` (absolute accuracy
/// around 1e-10, ample for the theta integrals below).
fn ln_gamma(z: Complex64) -> Complex64 {
    const COEF: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let tmp = z + 5.5;
    let tmp = (z + 0.5) * tmp.ln() - tmp;
    let mut ser = Complex64::new(1.000000000190015, 0.0);
    for (i, &c) in COEF.iter().enumerate() {
        ser += c / (z + (i as f64 + 1.0));
    }
    tmp + (2.5066282746310005 * ser / z).ln()
}

/// Antiderivative of the asymptotic theta (valid for `t >= 10`):
/// `t^2/4 log(t/2pi) - 3t^2/8 - pi t/8 + log(t)/48 - 7/(11520 t^2)`.
fn theta_antiderivative_asym(t: f64) -> f64 {
    0.25 * t * t * (t / (2.0 * PI)).ln() - 0.375 * t * t - PI * t / 8.0 + t.ln() / 48.0
        - 7.0 / (11520.0 * t * t)
}

/// `int_0^10 theta(u) du`, evaluated once through the exact small-argument
/// theta.
fn theta_integral_to_ten() -> f64 {
    static CACHE: OnceLock<f64> = OnceLock::new();
    *CACHE.get_or_init(|| {
        adaptive_integral(theta_small, 0.0, 10.0, 1e-12)
            .expect("theta is smooth on [0, 10]")
            .value
    })
}

/// `int_0^t theta(u) du`: exact theta below 10, closed-form antiderivative of
/// the asymptotic expansion above.
pub fn theta_integral(t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain(format!(
            "theta integral requires t >= 0, got {t}"
        )));
    }
    if t <= 10.0 {
        if t == 0.0 {
            return Ok(0.0);
        }
        return Ok(adaptive_integral(theta_small, 0.0, t, 1e-12)?.value);
    }
    Ok(theta_integral_to_ten() + theta_antiderivative_asym(t) - theta_antiderivative_asym(10.0))
}
