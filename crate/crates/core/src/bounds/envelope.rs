//! The three error envelopes `E1`, `E2`, `E3`.
//!
//! Each envelope collects every term of the corresponding explicit bound
//! beyond the leading `log t` coefficient:
//!
//! * `|S(t)|  <= b1(alpha) log t / log x  + E1(x0,t0,alpha;x) x / log^2 x`
//! * `|S1(t)| <= b2(alpha) log t / log^2 x + E2(x0,t0,alpha;x) x / log^3 x`
//! * `log|zeta(1/2+it)| <= (1+alpha)/2 * log t / log x + E3(alpha;x) sqrt(x) / log^2 x`
//!
//! The envelopes are finite sums of elementary terms; they are transcribed
//! term by term and checked in the tests against an independent transcription.

use super::selberg::{selberg_coefficients, SelbergParams};
use super::{BoundKind, LogHeight};
use crate::error::{Error, Result};
use crate::real::Real;

/// Minimal admissible alpha for the zeta-exponent bound; below it the sign
/// of a discarded term flips.
pub(crate) const ZETA_ALPHA_MIN: f64 = 0.49123;

/// `E1(x0, t0, alpha; x)` for the `S(t)` bound. Requires `x >= x0 >= e^{4/3}`.
pub fn envelope_s<T: Real>(p: &SelbergParams<T>, x: T) -> Result<T> {
    if p.kind != BoundKind::S {
        return Err(Error::domain("envelope_s requires kind S".to_string()));
    }
    check_x(p.x0, x)?;
    let c = selberg_coefficients(p)?;
    let a1 = c.a;
    let pi = T::PI();
    let lx = x.ln();
    let llx = lx.ln();
    let sx = x.sqrt();
    let two = T::lit(2.0);
    let four = T::lit(4.0);

    let mut e = four * a1 + two / pi;
    e = e + T::lit(46.2) / (pi * lx);
    e = e + (two * a1 + two / pi) * lx / sx;
    e = e + four / pi * (T::one() + T::lit(46.2) / lx) / sx;
    e = e + (T::lit(5.0) * a1 + T::lit(11.0) / (two * pi)) / (T::lit(48.0) * pi) * lx.powi(4) / x;
    e = e + (T::lit(11.0) * a1 + T::lit(18.0) / pi) / (T::lit(24.0) * pi) * lx.powi(3) / x;
    e = e + lx * lx * llx / (two * pi * x);
    e = e + (a1 - T::lit(12.949)) * lx * lx / x;
    e = e + (T::lit(1.417) / pi - T::lit(1.762) * a1 + c.c) * lx / x;
    e = e + (T::one() / (two * pi) - T::lit(4.679) * a1 + c.d) / x;
    Ok(e)
}

/// `E2(x0, t0, alpha; x)` for the `S1(t)` bound. Requires `x >= x0 >= e^{4/3}`.
pub fn envelope_s1<T: Real>(p: &SelbergParams<T>, x: T) -> Result<T> {
    if p.kind != BoundKind::S1 {
        return Err(Error::domain("envelope_s1 requires kind S1".to_string()));
    }
    check_x(p.x0, x)?;
    let c = selberg_coefficients(p)?;
    let a2 = c.a;
    let alpha = p.alpha;
    let pi = T::PI();
    let pi2 = pi * pi;
    let lx = x.ln();
    let llx = lx.ln();
    let sx = x.sqrt();
    let one = T::one();
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let four = T::lit(4.0);

    let mut e = four * a2 + (one + two * alpha) / pi;
    e = e + (T::lit(395.8) + T::lit(46.2) * alpha) / (pi * lx);
    e = e + two * (a2 + (one + alpha) / pi) * lx / sx;
    e = e + (T::lit(92.4) + four * alpha) / (pi * sx);
    e = e + T::lit(184.8) * alpha / (pi * sx * lx);
    e = e
        + ((three + T::lit(11.0) * alpha / T::lit(6.0)) / (T::lit(16.0) * pi2)
            + T::lit(5.0) * a2 / (T::lit(48.0) * pi))
            * lx.powi(4)
            / x;
    e = e + three * lx.powi(3) * llx / (four * pi2 * x);
    e = e
        + (three * alpha / (four * pi2) + T::lit(11.0) * a2 / (T::lit(24.0) * pi) - T::lit(23.34))
            * lx.powi(3)
            / x;
    e = e + alpha * lx * lx * llx / (two * pi * x);
    e = e + ((T::lit(81.8) - T::lit(40.68) * alpha) / pi + a2) * lx * lx / x;
    e = e + (T::lit(1.417) * alpha / pi - T::lit(1.762) * a2 + c.c) * lx / x;
    e = e + (alpha / (two * pi) - T::lit(4.679) * a2 + c.d) / x;
    Ok(e)
}

/// `E3(alpha; x)` for the zeta-exponent bound.
/// Requires `x >= 2` and `alpha >= 0.49123`.
pub fn envelope_zeta<T: Real>(alpha: T, x: T) -> Result<T> {
    if !(alpha >= T::lit(ZETA_ALPHA_MIN)) {
        return Err(Error::domain(format!(
            "zeta envelope requires alpha >= {ZETA_ALPHA_MIN}, got {alpha}"
        )));
    }
    if !(x >= T::lit(2.0)) {
        return Err(Error::domain(format!(
            "zeta envelope requires x >= 2, got {x}"
        )));
    }
    let pi = T::PI();
    let lx = x.ln();
    let llx = lx.ln();
    let sx = x.sqrt();
    let one = T::one();
    let two = T::lit(2.0);

    let mut e = T::lit(4.0);
    e = e + T::lit(184.8) / lx;
    e = e + lx.powi(4) / (T::lit(96.0) * pi * sx);
    e = e + lx.powi(3) / (T::lit(8.0) * pi * sx);
    e = e + lx * lx * llx / (two * sx);
    e = e - T::lit(13.3) * lx * lx / sx;
    e = e + (T::lit(4.417) + T::lit(3.0) * alpha) * lx / sx;
    e = e + (two + (-alpha).exp() / sx * (one + (x * (x * x - one)).recip())) / sx;
    Ok(e)
}

/// Kind-dispatching wrapper over the three envelopes. For `Zeta` the
/// parameter set degenerates to `alpha` alone.
pub fn envelope<T: Real>(kind: BoundKind, alpha: T, x0: T, t0: LogHeight<T>, x: T) -> Result<T> {
    match kind {
        BoundKind::S => envelope_s(&SelbergParams::new(alpha, x0, t0, BoundKind::S)?, x),
        BoundKind::S1 => envelope_s1(&SelbergParams::new(alpha, x0, t0, BoundKind::S1)?, x),
        BoundKind::Zeta => envelope_zeta(alpha, x),
    }
}

fn check_x<T: Real>(x0: T, x: T) -> Result<()> {
    let x0_min = (T::lit(4.0) / T::lit(3.0)).exp();
    if !(x0 >= x0_min - T::lit(1e-12)) || !(x >= x0) {
        return Err(Error::domain(format!(
            "envelope requires e^(4/3) <= x0 <= x, got x0 = {x0}, x = {x}"
        )));
    }
    Ok(())
}
