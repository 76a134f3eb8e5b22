//! Coefficients of the Dirichlet-segment approximations to `S(t)` and `S1(t)`.
//!
//! The approximations evaluate a truncated von Mangoldt sum at the abscissa
//! `sigma_{x,alpha} = 1/2 + alpha/log x` and control the remainder by four
//! explicit weights `(a, b, c, d)` that depend on `alpha`, on the decreasing
//! function `A(x0)` and on the floor height `t0`.

use super::{BoundKind, LogHeight};
use crate::error::{Error, Result};
use crate::real::Real;

/// Parameters of one Dirichlet-segment approximation.
///
/// `t0` is the floor height of the estimate; it enters only through `1/t0`,
/// so it is carried in log-space and `exp(-ln t0)` underflows gracefully to
/// zero at astronomical heights.
#[derive(Debug, Clone, Copy)]
pub struct SelbergParams<T: Real> {
    pub alpha: T,
    pub x0: T,
    pub t0: LogHeight<T>,
    pub kind: BoundKind,
}

impl<T: Real> SelbergParams<T> {
    /// Requires `1 <= alpha <= 2`, `t0 >= 10`, `x0 >= e^{4/3}` and a kind of
    /// `S` or `S1`.
    pub fn new(alpha: T, x0: T, t0: LogHeight<T>, kind: BoundKind) -> Result<Self> {
        if kind == BoundKind::Zeta {
            return Err(Error::domain(
                "Selberg coefficient sets exist for kinds S and S1 only",
            ));
        }
        if !(alpha >= T::one() && alpha <= T::lit(2.0)) {
            return Err(Error::domain(format!(
                "alpha must lie in [1, 2], got {alpha}"
            )));
        }
        if !(t0.ln_t() >= T::LN_10() - T::lit(1e-12)) {
            return Err(Error::domain(format!(
                "t0 must be >= 10, got ln t0 = {}",
                t0.ln_t()
            )));
        }
        let x0_min = (T::lit(4.0) / T::lit(3.0)).exp();
        if !(x0 >= x0_min - T::lit(1e-12)) {
            return Err(Error::domain(format!(
                "x0 must be >= e^(4/3) = {x0_min}, got {x0}"
            )));
        }
        Ok(SelbergParams {
            alpha,
            x0,
            t0,
            kind,
        })
    }

    #[inline]
    fn inv_t0(&self) -> T {
        (-self.t0.ln_t()).exp()
    }
}

/// The four remainder weights of one approximation.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SelbergCoefficients<T: Real> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// An upper bound on `|r(x,t,alpha)|`, the truncated von Mangoldt sum at
/// `sigma_{x,alpha}`; usually supplied by the `primes` module.
#[derive(Debug, Clone, Copy)]
pub struct RBound<T: Real>(T);

impl<T: Real> RBound<T> {
    pub fn new(value: T) -> Result<Self> {
        if !(value >= T::zero()) {
            return Err(Error::domain(format!("RBound must be >= 0, got {value}")));
        }
        Ok(RBound(value))
    }

    /// The vanishing bound `r = 0`, dropping the first remainder term.
    pub fn zero() -> Self {
        RBound(T::zero())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// `A(x0) = (1/log x0) (1 + x0^{-1/2} + ((x0^2+1) sqrt(x0) + 1) / (x0^2 (x0^4 - 1)))`.
///
/// Strictly decreasing for `x0 > 1`, so evaluating it at the smallest
/// admissible `x0` bounds it for every larger cutoff.
pub fn coeff_a<T: Real>(x0: T) -> Result<T> {
    if !(x0 > T::one()) {
        return Err(Error::domain(format!("A(x0) requires x0 > 1, got {x0}")));
    }
    let sqrt_x0 = x0.sqrt();
    let x0_2 = x0 * x0;
    let x0_4 = x0_2 * x0_2;
    let tail = ((x0_2 + T::one()) * sqrt_x0 + T::one()) / (x0_2 * (x0_4 - T::one()));
    Ok((T::one() + sqrt_x0.recip() + tail) / x0.ln())
}

/// Common positive denominator `alpha e^alpha - 1 - e^{-alpha}`.
#[inline]
pub(crate) fn denom<T: Real>(alpha: T) -> T {
    alpha * alpha.exp() - T::one() - (-alpha).exp()
}

/// Evaluates the four weights `(a_k, b_k, c_k, d_k)` for the `S` (k = 1) or
/// `S1` (k = 2) approximation at the given parameters.
pub fn selberg_coefficients<T: Real>(p: &SelbergParams<T>) -> Result<SelbergCoefficients<T>> {
    let alpha = p.alpha;
    let pi = T::PI();
    let ea = alpha.exp();
    let ema = (-alpha).exp();
    let den = denom(alpha);
    let a_x0 = coeff_a(p.x0)?;
    let inv_t0 = p.inv_t0();
    let one = T::one();
    let two = T::lit(2.0);
    let three = T::lit(3.0);

    let coefs = match p.kind {
        BoundKind::S => {
            let a2 = alpha * alpha;
            let a = ((pi + two) * a2 * ea + two * (one + ema / two)) / (two * pi * den);
            let b = (pi * a2 * ea + two * (one + alpha) + (one + two * alpha) * ema)
                / (T::lit(4.0) * pi * den);
            let c = (alpha * (two + (two + pi) * alpha) * a_x0
                + T::lit(6.0) * (one + alpha) * (one + ema)
                + three * pi * a2 * ea)
                / (two * pi * den)
                + two * alpha / pi * inv_t0;
            let d = a2 / pi * inv_t0 * (pi / T::lit(4.0) + inv_t0);
            SelbergCoefficients { a, b, c, d }
        }
        BoundKind::S1 => {
            let a2 = alpha * alpha;
            let a3 = a2 * alpha;
            let a = (a3 * ea + one + alpha + (one + two * alpha) / T::lit(4.0) * ema) / (pi * den);
            let b = (a3 * ea + (a2 + alpha + T::lit(0.5)) * ema + a2 + two * (one + alpha))
                / (T::lit(4.0) * pi * den);
            let c = (three * a3 * ea
                + two * alpha * (a2 + alpha + one) * a_x0
                + three * (a2 + two * alpha + two) * (one + ema))
                / (two * pi * den)
                + a2 / pi * inv_t0;
            let d = a3 / (two * pi) * inv_t0 * (pi / T::lit(4.0) + inv_t0);
            SelbergCoefficients { a, b, c, d }
        }
        BoundKind::Zeta => unreachable!("rejected in SelbergParams::new"),
    };

    for (name, v) in [
        ("a", coefs.a),
        ("b", coefs.b),
        ("c", coefs.c),
        ("d", coefs.d),
    ] {
        if !v.is_finite() || !(v >= T::zero()) {
            return Err(Error::domain(format!(
                "coefficient {name} is not finite and positive at alpha = {alpha}"
            )));
        }
    }
    Ok(coefs)
}

/// Full right-hand side of the approximation:
/// `a r / log^k x + b log t / log^k x + c / log^k x + d / log^{k+1} x`
/// with `k = 1` for `S` and `k = 2` for `S1`.
pub fn approximation_rhs<T: Real>(
    p: &SelbergParams<T>,
    x: T,
    h: LogHeight<T>,
    r: RBound<T>,
) -> Result<T> {
    if !(x >= p.x0) {
        return Err(Error::domain(format!(
            "x must satisfy x0 <= x, got x = {x} < x0 = {}",
            p.x0
        )));
    }
    if !(x.ln() <= T::lit(2.0) * h.ln_t()) {
        return Err(Error::domain(format!(
            "x must satisfy x <= t^2, got x = {x}"
        )));
    }
    if !(h.ln_t() >= p.t0.ln_t() - T::lit(1e-12)) {
        return Err(Error::domain("height must satisfy t >= t0".to_string()));
    }
    let coefs = selberg_coefficients(p)?;
    let lx = x.ln();
    let lxk = match p.kind {
        BoundKind::S => lx,
        BoundKind::S1 => lx * lx,
        BoundKind::Zeta => unreachable!(),
    };
    Ok(coefs.a * r.value() / lxk + coefs.b * h.ln_t() / lxk + coefs.c / lxk + coefs.d / (lxk * lx))
}
