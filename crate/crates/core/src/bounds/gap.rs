//! Explicit bound on gaps between consecutive zero ordinates above `10^2465`.

use super::{m_value, LogHeight, MCoefficients};
use crate::error::{Error, Result};
use crate::real::Real;

/// Coefficients of the packaged gap bound `M(9.55, 253.82, 0.285; gamma)`.
pub fn gap_coefficients<T: Real>() -> MCoefficients<T> {
    MCoefficients {
        a: T::lit(9.55),
        b: T::lit(253.82),
        c: T::lit(0.285),
        t_min_log10: T::lit(2465.0),
    }
}

/// Coefficients of `c0(T) = M(0.7592, 20.19, 0.2849; T)`, the `S(t)` constant
/// feeding the gap argument.
pub fn gap_c0_coefficients<T: Real>() -> MCoefficients<T> {
    MCoefficients {
        a: T::lit(0.7592),
        b: T::lit(20.19),
        c: T::lit(0.2849),
        t_min_log10: T::lit(2465.0),
    }
}

/// The `M`-value of the gap bound at ordinate height `h`.
pub fn gap_m_value<T: Real>(h: LogHeight<T>) -> Result<T> {
    m_value(&gap_coefficients::<T>(), h)
}

/// Gap bound `M(9.55, 253.82, 0.285; gamma) / log log gamma` for consecutive
/// ordinates `gamma' >= gamma >= 10^2465`.
pub fn gap_bound<T: Real>(h: LogHeight<T>) -> Result<T> {
    Ok(gap_m_value(h)? / h.ln_ln_t())
}

/// Infimum of admissible `c-hat` in the zero-gap lemma:
///
/// ```text
/// 4 pi c0 (1 + log log T0 / (150 c0 T0 log T0))
///         (1 - log(2 pi)/log T0 - 2 pi c0 / (T0 log T0 log log T0))^{-1}
/// ```
///
/// computed in log-space; `1/T0 = exp(-ln T0)` underflows gracefully to zero
/// at astronomical heights, which is exactly the limit of both correction
/// factors.
pub fn gap_c_hat<T: Real>(c0: T, t0: LogHeight<T>) -> Result<T> {
    if !(c0 > T::zero()) {
        return Err(Error::domain(format!("c0 must be positive, got {c0}")));
    }
    let l0 = t0.ln_t();
    let ll0 = t0.ln_ln_t();
    let two_pi = T::lit(2.0) * T::PI();
    if !(l0 > two_pi.ln()) {
        return Err(Error::domain("gap lemma requires T0 > 2 pi".to_string()));
    }
    // Side condition T0 log(T0/2pi) log log T0 > 2 pi c0, checked in logs.
    let lhs_ln = l0 + (l0 - two_pi.ln()).ln() + ll0.ln();
    if !(lhs_ln > (two_pi * c0).ln()) {
        return Err(Error::domain(
            "gap lemma side condition T0 log(T0/2pi) log log T0 > 2 pi c0 fails".to_string(),
        ));
    }
    let inv_t0 = (-l0).exp();
    let first = T::one() + ll0 * inv_t0 / (T::lit(150.0) * c0 * l0);
    let second = T::one() - two_pi.ln() / l0 - two_pi * c0 * inv_t0 / (l0 * ll0);
    if !(second > T::zero()) {
        return Err(Error::domain(
            "gap lemma correction factor is nonpositive at this height".to_string(),
        ));
    }
    Ok(T::lit(4.0) * T::PI() * c0 * first / second)
}
