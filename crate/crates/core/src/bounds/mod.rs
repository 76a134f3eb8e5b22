//! Closed-form evaluation of the explicit bounds.
//!
//! Everything here works in log-space: a height `t` is carried as
//! `L = ln t` (see [`LogHeight`]), so heights like `10^2465` stay well inside
//! `f64` range while `t` itself is never formed. All formulas are functions
//! of `log t` and `log log t` only.
//!
//! The central envelope is
//!
//! ```text
//! M(a, b, c; t) = a + b / ((ln t)^c * ln ln t)
//! ```
//!
//! which packages a main constant together with an explicitly decaying
//! correction. The conditional bounds for `S(t)`, `S1(t)` and
//! `log |zeta(1/2+it)|` all reduce to an `M`-value times `log t / (log log t)^k`.

mod comparators;
mod composition;
mod envelope;
mod gap;
mod selberg;

pub use comparators::{unconditional_bound, HiaryConstant, UnconditionalVariant};
pub use composition::{conditional_bound, conditional_m_value, CompositionParams};
pub use envelope::{envelope, envelope_s, envelope_s1, envelope_zeta};
pub use gap::{gap_bound, gap_c0_coefficients, gap_c_hat, gap_coefficients, gap_m_value};
pub use selberg::{
    approximation_rhs, coeff_a, selberg_coefficients, RBound, SelbergCoefficients, SelbergParams,
};

use crate::error::{Error, Result};
use crate::real::Real;

/// Which of the three bounded quantities a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BoundKind {
    /// The argument function `S(t)`.
    S,
    /// Its antiderivative `S1(t)`.
    S1,
    /// `log |zeta(1/2 + it)|` (all zeta bounds are exponent bounds).
    Zeta,
}

impl BoundKind {
    /// Power of `log log t` dividing the leading `log t` in the bound.
    pub fn loglog_power(self) -> u32 {
        match self {
            BoundKind::S | BoundKind::Zeta => 1,
            BoundKind::S1 => 2,
        }
    }
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::S => write!(f, "S"),
            BoundKind::S1 => write!(f, "S1"),
            BoundKind::Zeta => write!(f, "ZETA"),
        }
    }
}

/// A height `t > 1` represented by its natural logarithm.
///
/// `ln ln t` is recomputed on demand, never cached. Heights down to `t = 1`
/// are representable (the unconditional comparators go that low); operations
/// that divide by `ln ln t` reject heights with `ln t <= 1` themselves.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogHeight<T: Real> {
    l: T,
}

impl<T: Real> LogHeight<T> {
    /// Height from `L = ln t`. Requires `L >= 0`, i.e. `t >= 1`.
    pub fn from_ln(l: T) -> Result<Self> {
        if !l.is_finite() || l < T::zero() {
            return Err(Error::domain(format!(
                "LogHeight requires finite ln t >= 0, got {l}"
            )));
        }
        Ok(LogHeight { l })
    }

    /// Height from `log10 t`, the `--t10` convention of the CLI.
    pub fn from_log10(x10: T) -> Result<Self> {
        Self::from_ln(x10 * T::LN_10())
    }

    /// Height from `t` itself; only usable when `t` fits in the scalar type.
    pub fn from_t(t: T) -> Result<Self> {
        if !(t >= T::one()) {
            return Err(Error::domain(format!("LogHeight requires t >= 1, got {t}")));
        }
        Self::from_ln(t.ln())
    }

    /// `ln t`.
    #[inline]
    pub fn ln_t(self) -> T {
        self.l
    }

    /// `ln ln t` (negative for `t < e`, `-inf` at `t = 1`).
    #[inline]
    pub fn ln_ln_t(self) -> T {
        self.l.ln()
    }

    /// `log10 t`.
    #[inline]
    pub fn log10_t(self) -> T {
        self.l / T::LN_10()
    }
}

/// Coefficients `(a, b, c)` of `M(a, b, c; t)` plus the height threshold
/// (as `log10 t`) above which the packaged bound is proved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCoefficients<T: Real> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub t_min_log10: T,
}

impl<T: Real> MCoefficients<T> {
    /// Requires `a > 0`, `c > 0` and `b >= 0` (`b = 0` drops the correction
    /// term entirely), plus a nonnegative validity threshold.
    pub fn new(a: T, b: T, c: T, t_min_log10: T) -> Result<Self> {
        if !(a > T::zero()) || !(c > T::zero()) {
            return Err(Error::domain(format!(
                "M coefficients require a > 0 and c > 0, got a = {a}, c = {c}"
            )));
        }
        if !(b >= T::zero()) {
            return Err(Error::domain(format!(
                "M coefficients require b >= 0, got b = {b}"
            )));
        }
        if !(t_min_log10 >= T::zero()) {
            return Err(Error::domain(format!(
                "validity threshold must be >= 0, got {t_min_log10}"
            )));
        }
        Ok(MCoefficients {
            a,
            b,
            c,
            t_min_log10,
        })
    }

    /// Packaged headline `S(t)` coefficients, `M(0.759282, 20.1911, 0.285; t)`,
    /// valid from `10^2465`.
    pub fn packaged_s() -> Self {
        MCoefficients {
            a: T::lit(0.759282),
            b: T::lit(20.1911),
            c: T::lit(0.285),
            t_min_log10: T::lit(2465.0),
        }
    }

    /// `S1(t)` coefficients: `M(0.653, 60.12, 0.2705; t)` from `10^208`.
    pub fn packaged_s1() -> Self {
        MCoefficients {
            a: T::lit(0.653),
            b: T::lit(60.12),
            c: T::lit(0.2705),
            t_min_log10: T::lit(208.0),
        }
    }

    /// Exponent coefficients for `|zeta(1/2+it)|`: `M(0.5, 6.361, 0.252; t)`
    /// from `10^40`.
    pub fn packaged_zeta() -> Self {
        MCoefficients {
            a: T::lit(0.5),
            b: T::lit(6.361),
            c: T::lit(0.252),
            t_min_log10: T::lit(40.0),
        }
    }

    /// Packaged headline coefficients for a given kind.
    pub fn packaged(kind: BoundKind) -> Self {
        match kind {
            BoundKind::S => Self::packaged_s(),
            BoundKind::S1 => Self::packaged_s1(),
            BoundKind::Zeta => Self::packaged_zeta(),
        }
    }
}

/// Evaluates `M(a, b, c; t) = a + b / ((ln t)^c * ln ln t)` in log-space.
///
/// Strictly decreasing in the height for fixed positive coefficients.
/// Rejects heights below the coefficients' validity threshold and heights
/// with `ln ln t <= 0`.
pub fn m_value<T: Real>(coef: &MCoefficients<T>, h: LogHeight<T>) -> Result<T> {
    let l = h.ln_t();
    let ll = h.ln_ln_t();
    if !(ll > T::zero()) {
        return Err(Error::domain(format!(
            "M(a,b,c;t) requires ln ln t > 0, got ln t = {l}"
        )));
    }
    // Allow evaluation exactly at the threshold despite binary rounding of
    // t_min_log10 * ln 10.
    let slack = T::lit(1e-9);
    if l + slack < coef.t_min_log10 * T::LN_10() {
        return Err(Error::domain(format!(
            "height log10 t = {} is below the validity threshold 10^{}",
            h.log10_t(),
            coef.t_min_log10
        )));
    }
    Ok(coef.a + coef.b / (l.powf(coef.c) * ll))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h10(x10: f64) -> LogHeight<f64> {
        LogHeight::from_log10(x10).unwrap()
    }

    #[test]
    fn log_height_recomputes_ll() {
        let h = h10(2465.0);
        assert!((h.ln_t() - 2465.0 * std::f64::consts::LN_10).abs() < 1e-9);
        assert!((h.ln_ln_t() - h.ln_t().ln()).abs() == 0.0);
        assert!(LogHeight::<f64>::from_ln(-1.0).is_err());
        assert!(LogHeight::<f64>::from_t(0.5).is_err());
        assert!(LogHeight::<f64>::from_t(f64::NAN).is_err());
    }

    #[test]
    fn m_value_at_packaged_coefficients() {
        // Direct log-space evaluation, frozen from a high-precision oracle.
        let m = m_value(&MCoefficients::packaged_s(), h10(2465.0)).unwrap();
        assert!((m - 0.958_141_780_343_655_5).abs() < 1e-12, "m = {m}");
        assert!((m - 0.9581).abs() < 2e-4);

        let m1 = m_value(&MCoefficients::packaged_s1(), h10(208.0)).unwrap();
        assert!((m1 - 2.487_880_561_390_933_3).abs() < 1e-12, "m1 = {m1}");

        let mz = m_value(&MCoefficients::packaged_zeta(), h10(40.0)).unwrap();
        assert!((mz - 0.949_893_580_085_271_4).abs() < 1e-12, "mz = {mz}");
    }

    #[test]
    fn m_value_vanishing_correction() {
        let c = MCoefficients::new(0.7, 0.0, 0.3, 1.0).unwrap();
        let m = m_value(&c, h10(50.0)).unwrap();
        assert_eq!(m, 0.7);
    }

    #[test]
    fn m_value_rejects_bad_inputs() {
        assert!(MCoefficients::new(-1.0, 1.0, 1.0, 0.0).is_err());
        assert!(MCoefficients::new(1.0, -1.0, 1.0, 0.0).is_err());
        assert!(MCoefficients::new(1.0, 1.0, 0.0, 0.0).is_err());
        // Below the validity threshold.
        assert!(m_value(&MCoefficients::<f64>::packaged_zeta(), h10(39.0)).is_err());
        // ln ln t <= 0.
        let c = MCoefficients::new(1.0, 1.0, 1.0, 0.0).unwrap();
        assert!(m_value(&c, LogHeight::from_ln(0.5).unwrap()).is_err());
    }

    #[test]
    fn m_value_strictly_decreasing_in_height() {
        let c = MCoefficients::new(0.3, 7.0, 0.41, 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for i in 0..10_000 {
            let x10 = 1.0 + i as f64 * 0.5;
            let m = m_value(&c, h10(x10)).unwrap();
            assert!(m < prev, "not decreasing at x10 = {x10}");
            prev = m;
        }
    }

    #[test]
    fn m_value_generic_over_f32() {
        let c = bounds_f32();
        let h = LogHeight::<f32>::from_log10(100.0f32).unwrap();
        let m = m_value(&c, h).unwrap();
        assert!((m - 1.0).abs() < 0.2);
    }

    fn bounds_f32() -> MCoefficients<f32> {
        MCoefficients::new(0.9f32, 2.0, 0.3, 1.0).unwrap()
    }
}
