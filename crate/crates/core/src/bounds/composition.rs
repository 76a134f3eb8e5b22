//! Composition of the segment bounds into height-only bounds.
//!
//! Substituting `x0 = x = (log t)^lambda` turns each segment bound into an
//! `M`-envelope times the appropriate `log t / (log log t)^k`:
//!
//! * `S`:    `M(b1/lambda,       E1/lambda^2, 1 - lambda;   t) * log t / log log t`
//! * `S1`:   `M(b2/lambda^2,     E2/lambda^3, 1 - lambda;   t) * log t / (log log t)^2`
//! * `Zeta`: `M((1+a)/(2lambda), E3/lambda^2, 1 - lambda/2; t) * log t / log log t`
//!
//! The `lambda` windows keep `x` inside the validity range of the segment
//! bounds at the evaluation height, and are enforced, never clamped.

use super::envelope::{envelope_s, envelope_s1, envelope_zeta, ZETA_ALPHA_MIN};
use super::selberg::{selberg_coefficients, SelbergParams};
use super::{BoundKind, LogHeight};
use crate::error::{Error, Result};
use crate::real::Real;

/// `(alpha, lambda)` pair for one composed bound.
#[derive(Debug, Clone, Copy)]
pub struct CompositionParams<T: Real> {
    pub alpha: T,
    pub lambda: T,
    pub kind: BoundKind,
}

impl<T: Real> CompositionParams<T> {
    pub fn new(alpha: T, lambda: T, kind: BoundKind) -> Self {
        CompositionParams {
            alpha,
            lambda,
            kind,
        }
    }

    /// The reference parameter choices behind the packaged coefficient sets.
    pub fn reference(kind: BoundKind) -> Self {
        match kind {
            BoundKind::S => Self::new(T::lit(1.5281), T::lit(0.715), kind),
            BoundKind::S1 => Self::new(T::lit(1.3045), T::lit(0.7295), kind),
            BoundKind::Zeta => Self::new(T::lit(ZETA_ALPHA_MIN), T::lit(1.4947), kind),
        }
    }

    /// Checks the height-dependent validity window.
    ///
    /// For `S`/`S1`: `alpha` in `[1,2]` and `lambda` in `[4/(3 log log t), 1)`.
    /// For `Zeta`: `alpha >= 0.49123` and `lambda` in `[log 2 / log log t, 2)`.
    /// Both lower ends say exactly that `x = (log t)^lambda` clears the
    /// envelope's floor (`e^{4/3}` resp. `2`).
    pub fn validate_at(&self, h: LogHeight<T>) -> Result<()> {
        let ll = h.ln_ln_t();
        if !(h.ln_t() >= T::LN_10() - T::lit(1e-12)) {
            return Err(Error::domain(
                "conditional bounds require t >= 10".to_string(),
            ));
        }
        let slack = T::lit(1e-12);
        match self.kind {
            BoundKind::S | BoundKind::S1 => {
                if !(self.alpha >= T::one() && self.alpha <= T::lit(2.0)) {
                    return Err(Error::domain(format!(
                        "alpha must lie in [1, 2], got {}",
                        self.alpha
                    )));
                }
                let lo = T::lit(4.0) / (T::lit(3.0) * ll);
                if !(self.lambda + slack >= lo && self.lambda < T::one()) {
                    return Err(Error::domain(format!(
                        "lambda = {} outside [4/(3 log log t), 1) = [{lo}, 1) at this height",
                        self.lambda
                    )));
                }
            }
            BoundKind::Zeta => {
                if !(self.alpha >= T::lit(ZETA_ALPHA_MIN)) {
                    return Err(Error::domain(format!(
                        "alpha must be >= {ZETA_ALPHA_MIN}, got {}",
                        self.alpha
                    )));
                }
                let lo = T::lit(2.0).ln() / ll;
                if !(self.lambda + slack >= lo && self.lambda < T::lit(2.0)) {
                    return Err(Error::domain(format!(
                        "lambda = {} outside [log 2 / log log t, 2) = [{lo}, 2) at this height",
                        self.lambda
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Composed `M`-envelope evaluated at height `h`: the triple `(a, b, c)`
/// after the `x = (log t)^lambda` substitution, together with its value.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ComposedM<T: Real> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub value: T,
    /// The substituted cutoff `x = (log t)^lambda`.
    pub x: T,
    /// The envelope value `E_k` before division by powers of lambda.
    pub envelope: T,
}

/// The composed `M`-value (the quantity that multiplies `log t / (log log t)^k`).
pub fn conditional_m_value<T: Real>(
    cp: &CompositionParams<T>,
    h: LogHeight<T>,
) -> Result<ComposedM<T>> {
    cp.validate_at(h)?;
    let l = h.ln_t();
    let ll = h.ln_ln_t();
    let lam = cp.lambda;
    let x = l.powf(lam);

    let (a, b, c, env) = match cp.kind {
        BoundKind::S => {
            let p = SelbergParams::new(cp.alpha, x, h, BoundKind::S)?;
            let coefs = selberg_coefficients(&p)?;
            let e1 = envelope_s(&p, x)?;
            (coefs.b / lam, e1 / (lam * lam), T::one() - lam, e1)
        }
        BoundKind::S1 => {
            let p = SelbergParams::new(cp.alpha, x, h, BoundKind::S1)?;
            let coefs = selberg_coefficients(&p)?;
            let e2 = envelope_s1(&p, x)?;
            (
                coefs.b / (lam * lam),
                e2 / (lam * lam * lam),
                T::one() - lam,
                e2,
            )
        }
        BoundKind::Zeta => {
            let e3 = envelope_zeta(cp.alpha, x)?;
            (
                (T::one() + cp.alpha) / (T::lit(2.0) * lam),
                e3 / (lam * lam),
                T::one() - lam / T::lit(2.0),
                e3,
            )
        }
    };

    let value = a + b / (l.powf(c) * ll);
    Ok(ComposedM {
        a,
        b,
        c,
        value,
        x,
        envelope: env,
    })
}

/// The composed conditional bound at height `h`.
///
/// For `S` and `S1` this bounds `|S(t)|` resp. `|S1(t)|`; for `Zeta` it is
/// the exponent, i.e. an upper bound on `log |zeta(1/2+it)|`.
pub fn conditional_bound<T: Real>(cp: &CompositionParams<T>, h: LogHeight<T>) -> Result<T> {
    let m = conditional_m_value(cp, h)?;
    let l = h.ln_t();
    let ll = h.ln_ln_t();
    let scale = match cp.kind.loglog_power() {
        1 => l / ll,
        2 => l / (ll * ll),
        _ => unreachable!(),
    };
    Ok(m.value * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{m_value, unconditional_bound, MCoefficients, UnconditionalVariant};

    fn h10(x10: f64) -> LogHeight<f64> {
        LogHeight::from_log10(x10).unwrap()
    }

    #[test]
    fn crossover_heights_match_comparators() {
        // At the reference parameters the conditional bounds meet their
        // comparators at the reproduced thresholds (within 0.5%).
        let s =
            conditional_bound(&CompositionParams::reference(BoundKind::S), h10(2465.0)).unwrap();
        let s_cmp = unconditional_bound(UnconditionalVariant::MinPlattBpt, h10(2465.0)).unwrap();
        assert!((s - 629.141_724_263_707_4).abs() < 1e-9, "cond S = {s}");
        assert!(((s - s_cmp) / s_cmp).abs() < 5e-3);

        let s1 =
            conditional_bound(&CompositionParams::reference(BoundKind::S1), h10(207.7)).unwrap();
        let s1_cmp = unconditional_bound(UnconditionalVariant::S1Explicit, h10(207.7)).unwrap();
        assert!((s1 - 31.268_678_393_882_737).abs() < 1e-9, "cond S1 = {s1}");
        assert!(((s1 - s1_cmp) / s1_cmp).abs() < 5e-3);

        let z =
            conditional_bound(&CompositionParams::reference(BoundKind::Zeta), h10(39.2)).unwrap();
        let z_cmp = unconditional_bound(
            UnconditionalVariant::Hiary(crate::bounds::HiaryConstant::C063),
            h10(39.2),
        )
        .unwrap();
        assert!((z - 19.087_557_575_439_031).abs() < 1e-9, "cond Z = {z}");
        assert!(((z - z_cmp) / z_cmp).abs() < 5e-3);
    }

    #[test]
    fn composed_value_equals_m_value_route() {
        // Algebraic consistency: conditional / (L / LL^k) must equal an
        // independent M(a, b, c; t) evaluation of the composed coefficients.
        for (kind, x10) in [
            (BoundKind::S, 2465.0),
            (BoundKind::S, 400.0),
            (BoundKind::S1, 207.7),
            (BoundKind::Zeta, 39.2),
            (BoundKind::Zeta, 400.0),
        ] {
            let cp = CompositionParams::reference(kind);
            let h = h10(x10);
            let m = conditional_m_value(&cp, h).unwrap();
            let coefs = MCoefficients::new(m.a, m.b, m.c, 0.0).unwrap();
            let via_m = m_value(&coefs, h).unwrap();
            let l = h.ln_t();
            let ll = h.ln_ln_t();
            let scale = if kind.loglog_power() == 1 {
                l / ll
            } else {
                l / (ll * ll)
            };
            let direct = conditional_bound(&cp, h).unwrap();
            assert!(
                ((direct / scale - via_m) / via_m).abs() < 1e-12,
                "inconsistent m-value at {kind} {x10}"
            );
        }
    }

    #[test]
    fn conditional_beats_comparator_at_packaged_thresholds() {
        // Crossover correctness: at 10^2465 / 10^208 / 10^40 the conditional
        // bounds already sit below their unconditional comparators.
        let cases = [
            (BoundKind::S, 2465.0, UnconditionalVariant::MinPlattBpt),
            (BoundKind::S1, 208.0, UnconditionalVariant::S1Explicit),
            (
                BoundKind::Zeta,
                40.0,
                UnconditionalVariant::Hiary(crate::bounds::HiaryConstant::C063),
            ),
        ];
        for (kind, x10, comparator) in cases {
            let cond = conditional_bound(&CompositionParams::reference(kind), h10(x10)).unwrap();
            let unc = unconditional_bound(comparator, h10(x10)).unwrap();
            assert!(cond < unc, "{kind} at 10^{x10}: {cond} !< {unc}");
        }
    }

    #[test]
    fn composed_m_ratio_decreases_in_height() {
        let cp = CompositionParams::<f64>::reference(BoundKind::S);
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let x10 = 100.0 + 50.0 * i as f64;
            let m = conditional_m_value(&cp, h10(x10)).unwrap().value;
            assert!(m < prev);
            prev = m;
        }
    }

    #[test]
    fn lambda_windows_are_enforced() {
        // S window: lambda in [4/(3 log log t), 1).
        let cp = CompositionParams::new(1.5, 0.715, BoundKind::S);
        assert!(cp.validate_at(h10(2465.0)).is_ok());
        // At t = 10^2 the floor 4/(3 log log t) = 0.873 > 0.715.
        assert!(cp.validate_at(h10(2.0)).is_err());
        let cp_hi = CompositionParams::new(1.5, 1.0, BoundKind::S);
        assert!(cp_hi.validate_at(h10(2465.0)).is_err());
        // Zeta window: lambda in [log 2 / log log t, 2).
        let cz = CompositionParams::new(0.49123, 1.4947, BoundKind::Zeta);
        assert!(cz.validate_at(h10(39.2)).is_ok());
        // At t = 10 the floor log 2 / log log t = 0.831 excludes small lambda.
        let cz_low = CompositionParams::new(0.49123, 0.5, BoundKind::Zeta);
        assert!(cz_low.validate_at(h10(1.0)).is_err());
        // Heights below 10 are rejected outright.
        assert!(cz.validate_at(h10(0.9)).is_err());
        let cz_hi = CompositionParams::new(0.49123, 2.0, BoundKind::Zeta);
        assert!(cz_hi.validate_at(h10(39.2)).is_err());
        // Kind-specific alpha floors.
        assert!(CompositionParams::new(0.9, 0.7, BoundKind::S)
            .validate_at(h10(100.0))
            .is_err());
        assert!(CompositionParams::new(0.4, 1.5, BoundKind::Zeta)
            .validate_at(h10(100.0))
            .is_err());
    }

    #[test]
    fn composition_is_generic_over_f32() {
        let cp = CompositionParams::<f32>::reference(BoundKind::S);
        let h32 = LogHeight::<f32>::from_log10(2465.0f32).unwrap();
        let m32 = conditional_m_value(&cp, h32).unwrap().value;
        let m64 = conditional_m_value(
            &CompositionParams::<f64>::reference(BoundKind::S),
            h10(2465.0),
        )
        .unwrap()
        .value;
        assert!((m32 as f64 - m64).abs() < 1e-3, "f32 {m32} vs f64 {m64}");
    }

    #[test]
    fn zeta_sign_condition_on_alpha_grid() {
        // e^{-alpha}/alpha - alpha/2 - 1 <= 0 for alpha >= 0.49123: the
        // discarded term of the zeta-exponent derivation stays negative.
        for i in 0..=10_000 {
            let alpha = 0.49123 + i as f64 * (4.0 - 0.49123) / 10_000.0;
            let v = (-alpha).exp() / alpha - alpha / 2.0 - 1.0;
            assert!(v <= 0.0, "sign condition fails at alpha = {alpha}: {v}");
        }
    }
}
