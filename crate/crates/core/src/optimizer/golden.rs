//! Derivative-free scalar minimization (golden-section search).

use crate::error::{Error, Result};

/// Outcome of a scalar minimization.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ScalarMinResult {
    pub argmin: f64,
    pub min_value: f64,
    pub bracket: (f64, f64),
    pub iterations: u32,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9; // (sqrt 5 - 1) / 2

/// Golden-section search for the minimizer of a unimodal `objective` on
/// `[lo, hi]`, to absolute accuracy `tol` in the argument.
pub fn minimize_scalar<F: Fn(f64) -> f64>(
    objective: F,
    bracket: (f64, f64),
    tol: f64,
) -> Result<ScalarMinResult> {
    let (mut lo, mut hi) = bracket;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    let mut iterations = 0u32;
    while hi - lo > tol {
        iterations += 1;
        if iterations > 10_000 {
            return Err(Error::NonConvergence(
                "golden-section search exceeded 10000 iterations".to_string(),
            ));
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = objective(x2);
        }
    }
    let argmin = 0.5 * (lo + hi);
    Ok(ScalarMinResult {
        argmin,
        min_value: objective(argmin),
        bracket,
        iterations,
    })
}
