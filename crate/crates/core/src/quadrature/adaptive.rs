//! Adaptive Simpson quadrature with paired-rule error estimation.

use crate::error::{Error, Result};

/// Recursion depth cap; at depth 60 the panel width has shrunk by 2^60 and
/// further subdivision cannot make progress in `f64`.
pub const MAX_DEPTH: u32 = 60;

/// Outcome of one adaptive integration.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct IntegralResult {
    pub value: f64,
    /// Accumulated paired-rule error estimate (conservative, not a bound).
    pub error_estimate: f64,
    /// Number of accepted panels.
    pub subdivisions: u64,
}

struct Ctx<'a, F> {
    f: &'a F,
    subdivisions: u64,
    error: f64,
    failed: bool,
}

/// Integrates `f` over `[a, b]` to roughly `max(tol |I|, tol)` absolute
/// accuracy. Fails if the recursion depth cap is reached before the local
/// error estimates drop below the budget.
pub fn adaptive_integral<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<IntegralResult> {
    if !(a < b) {
        return Err(Error::domain(format!(
            "integration interval requires a < b, got [{a}, {b}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    for (x, v) in [(a, fa), (m, fm), (b, fb)] {
        if !v.is_finite() {
            return Err(Error::domain(format!("integrand is not finite at {x}")));
        }
    }
    let whole = simpson(a, b, fa, fm, fb);
    // Mixed tolerance: relative to a first whole-interval estimate, floored
    // at the absolute tol.
    let budget = tol.max(tol * whole.abs());
    let mut ctx = Ctx {
        f: &f,
        subdivisions: 0,
        error: 0.0,
        failed: false,
    };
    let value = recurse(&mut ctx, a, b, fa, fm, fb, whole, budget, 0);
    if ctx.failed {
        return Err(Error::NonConvergence(format!(
            "adaptive quadrature hit depth {MAX_DEPTH} on [{a}, {b}]"
        )));
    }
    Ok(IntegralResult {
        value,
        error_estimate: ctx.error,
        subdivisions: ctx.subdivisions,
    })
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    ctx: &mut Ctx<F>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    budget: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = (ctx.f)(lm);
    let frm = (ctx.f)(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    let err = (refined - whole) / 15.0;
    if err.abs() <= budget || (b - a) < f64::EPSILON * (a.abs() + b.abs()) {
        ctx.subdivisions += 2;
        ctx.error += err.abs();
        return refined + err; // Richardson extrapolation
    }
    if depth >= MAX_DEPTH {
        ctx.failed = true;
        return refined;
    }
    let half = 0.5 * budget;
    recurse(ctx, a, m, fa, flm, fm, left, half, depth + 1)
        + recurse(ctx, m, b, fm, frm, fb, right, half, depth + 1)
}

/// Fixed-step composite Simpson over `panels` panels; the independent
/// cross-check oracle for the adaptive rule.
pub fn fixed_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: u32) -> f64 {
    let n = panels.max(1) as usize;
    let h = (b - a) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        let x0 = a + h * i as f64;
        let x1 = x0 + h;
        acc += simpson(x0, x1, f(x0), f(0.5 * (x0 + x1)), f(x1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exactness() {
        let r = adaptive_integral(|x| x * x, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn against_fixed_step_oracle() {
        // int_2^100 dy / (sqrt y log^3 y), adaptive vs 10^6-panel Simpson.
        let f = |y: f64| 1.0 / (y.sqrt() * y.ln().powi(3));
        let adaptive = adaptive_integral(f, 2.0, 100.0, 1e-12).unwrap();
        let fixed = fixed_simpson(f, 2.0, 100.0, 1_000_000);
        assert!(
            ((adaptive.value - fixed) / fixed).abs() < 1e-9,
            "adaptive {} vs fixed {fixed}",
            adaptive.value
        );
        assert!(adaptive.subdivisions > 0);
    }

    #[test]
    fn antiderivative_identities() {
        // int_2^X log^n y / y dy = (log^{n+1} X - log^{n+1} 2)/(n+1), n = 0..3.
        let x_hi: f64 = 1000.0;
        for n in 0..=3i32 {
            let r = adaptive_integral(|y: f64| y.ln().powi(n) / y, 2.0, x_hi, 1e-12).unwrap();
            let exact = (x_hi.ln().powi(n + 1) - 2.0f64.ln().powi(n + 1)) / (n as f64 + 1.0);
            assert!(
                ((r.value - exact) / exact).abs() < 1e-10,
                "n = {n}: {} vs {exact}",
                r.value
            );
        }
    }

    #[test]
    fn rejects_bad_intervals() {
        assert!(adaptive_integral(|x| x, 1.0, 1.0, 1e-9).is_err());
        assert!(adaptive_integral(|x| x, 2.0, 1.0, 1e-9).is_err());
        assert!(adaptive_integral(|x| x, 0.0, 1.0, 0.0).is_err());
        assert!(adaptive_integral(|x| 1.0 / x, -1.0, 1.0, 1e-9).is_err()); // infinite at 0
    }
}
