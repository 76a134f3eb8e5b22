//! The unconditional comparator bounds.

use super::LogHeight;
use crate::error::{Error, Result};
use crate::real::Real;

/// Constant of the subconvexity comparator `C t^{1/6} log t`.
///
/// `0.63` is the original published constant; after the correction of the
/// second-derivative test underlying it, the constant becomes `0.77`. The
/// reproduced thresholds use `0.63`, so that stays the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum HiaryConstant {
    #[default]
    C063,
    C077,
}

impl HiaryConstant {
    pub fn value<T: Real>(self) -> T {
        match self {
            HiaryConstant::C063 => T::lit(0.63),
            HiaryConstant::C077 => T::lit(0.77),
        }
    }
}

/// Which unconditional bound to evaluate. The kind is implied by the variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnconditionalVariant {
    /// `|S(t)| <= 0.11 log t + 0.29 log log t + 2.29` for `t >= e`.
    Platt,
    /// `|S(t)| <= 0.28 log t` for `t >= 2 pi`.
    Bpt,
    /// Pointwise minimum of the two `S(t)` bounds, valid for `t >= 2 pi`.
    MinPlattBpt,
    /// `|S1(t)| <= 0.059 log t + 3.054` for `t >= 1`.
    S1Explicit,
    /// `log |zeta(1/2+it)| <= log C + (log t)/6 + log log t` for `t >= 3`.
    Hiary(HiaryConstant),
}

impl UnconditionalVariant {
    /// Validity floor as `ln t`.
    pub fn floor_ln<T: Real>(self) -> T {
        match self {
            UnconditionalVariant::Platt => T::one(),
            UnconditionalVariant::Bpt | UnconditionalVariant::MinPlattBpt => {
                (T::lit(2.0) * T::PI()).ln()
            }
            UnconditionalVariant::S1Explicit => T::zero(),
            UnconditionalVariant::Hiary(_) => T::lit(3.0).ln(),
        }
    }
}

/// Evaluates an unconditional comparator at the given height. The zeta
/// comparator is returned as a bound on `log |zeta(1/2+it)|`.
pub fn unconditional_bound<T: Real>(v: UnconditionalVariant, h: LogHeight<T>) -> Result<T> {
    let l = h.ln_t();
    if l + T::lit(1e-12) < v.floor_ln() {
        return Err(Error::domain(format!(
            "height ln t = {l} is below the comparator's validity floor {:?}",
            v
        )));
    }
    Ok(match v {
        UnconditionalVariant::Platt => T::lit(0.11) * l + T::lit(0.29) * h.ln_ln_t() + T::lit(2.29),
        UnconditionalVariant::Bpt => T::lit(0.28) * l,
        UnconditionalVariant::MinPlattBpt => {
            let platt = T::lit(0.11) * l + T::lit(0.29) * h.ln_ln_t() + T::lit(2.29);
            platt.min(T::lit(0.28) * l)
        }
        UnconditionalVariant::S1Explicit => T::lit(0.059) * l + T::lit(3.054),
        UnconditionalVariant::Hiary(c) => c.value::<T>().ln() + l / T::lit(6.0) + l.ln(),
    })
}
