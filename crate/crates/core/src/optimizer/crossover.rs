//! Crossover thresholds: the height above which a conditional bound is
//! permanently below its best unconditional comparator.

use crate::bounds::{
    conditional_bound, unconditional_bound, BoundKind, CompositionParams, HiaryConstant, LogHeight,
    UnconditionalVariant,
};
use crate::error::{Error, Result};

/// A solved crossover.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CrossoverResult {
    pub kind: BoundKind,
    pub alpha: f64,
    pub lambda: f64,
    /// Threshold height as `log10 t`.
    pub x10: f64,
    /// `conditional - unconditional` at the returned root.
    pub residual: f64,
}

/// Search bracket and resolution for the threshold solve.
#[derive(Debug, Clone, Copy)]
pub struct CrossoverOptions {
    /// Bracket in `log10 t`.
    pub bracket: (f64, f64),
    /// Multiplicative step of the top-down scan that brackets the largest root.
    pub scan_factor: f64,
    /// Bisection width target in `log10 t`.
    pub x10_tol: f64,
}

impl Default for CrossoverOptions {
    fn default() -> Self {
        CrossoverOptions {
            bracket: (1.2, 1.0e5),
            scan_factor: 1.01,
            x10_tol: 1e-7,
        }
    }
}

/// The comparator used for threshold solving: the pointwise best explicit
/// bound of the right kind.
pub fn default_comparator(kind: BoundKind, hiary: HiaryConstant) -> UnconditionalVariant {
    match kind {
        BoundKind::S => UnconditionalVariant::MinPlattBpt,
        BoundKind::S1 => UnconditionalVariant::S1Explicit,
        BoundKind::Zeta => UnconditionalVariant::Hiary(hiary),
    }
}

/// `conditional - unconditional` at `x10`, or `None` where the parameter
/// window (or a comparator floor) excludes the height.
fn margin(cp: &CompositionParams<f64>, comparator: UnconditionalVariant, x10: f64) -> Option<f64> {
    let h = LogHeight::<f64>::from_log10(x10).ok()?;
    let c = conditional_bound(cp, h).ok()?;
    let u = unconditional_bound(comparator, h).ok()?;
    Some(c - u)
}

/// Finds the largest root of `conditional(t) - unconditional(t)` over the
/// bracket: above it the conditional bound stays permanently better. The
/// scan walks down from the top of the bracket until the sign changes, then
/// bisects.
pub fn solve_crossover(
    cp: &CompositionParams<f64>,
    comparator: UnconditionalVariant,
    opts: &CrossoverOptions,
) -> Result<CrossoverResult> {
    let (lo, hi) = opts.bracket;
    if !(lo > 0.0 && lo < hi) {
        return Err(Error::domain(format!("invalid x10 bracket [{lo}, {hi}]")));
    }
    let g = |x10: f64| margin(cp, comparator, x10);

    let mut upper = hi;
    let g_hi = match g(upper) {
        Some(v) => v,
        // Surface the violated precondition rather than a generic message.
        None => {
            let h = LogHeight::<f64>::from_log10(hi)?;
            conditional_bound(cp, h)?;
            unconditional_bound(comparator, h)?;
            unreachable!("margin() is None only when one evaluation errors");
        }
    };
    if g_hi >= 0.0 {
        return Err(Error::NoRoot(format!(
            "conditional bound is not below the comparator at x10 = {hi}"
        )));
    }

    // Top-down scan for the first sign change (the largest root).
    let mut lower = upper;
    let mut found = false;
    while lower > lo {
        let next = (lower / opts.scan_factor).max(lo);
        match g(next) {
            Some(v) if v >= 0.0 => {
                lower = next;
                found = true;
                break;
            }
            Some(_) => {
                upper = next;
                lower = next;
            }
            // Fell out of the feasibility window: no root below here.
            None => break,
        }
    }
    if !found {
        return Err(Error::NoRoot(
            "conditional - unconditional has constant sign on the feasible bracket".to_string(),
        ));
    }

    // Bisection on [lower, upper]: g(lower) >= 0 > g(upper).
    let mut a = lower;
    let mut b = upper;
    while b - a > opts.x10_tol {
        let mid = 0.5 * (a + b);
        match g(mid) {
            Some(v) if v >= 0.0 => a = mid,
            Some(_) => b = mid,
            None => a = mid, // infeasible only below; treat as the positive side
        }
    }
    let root = 0.5 * (a + b);
    let residual = g(root).unwrap_or(f64::NAN);
    Ok(CrossoverResult {
        kind: cp.kind,
        alpha: cp.alpha,
        lambda: cp.lambda,
        x10: root,
        residual,
    })
}

/// Grid-plus-pattern-search minimization of the crossover threshold over
/// `(alpha, lambda)`.
///
/// The coarse grid is seeded with the reference parameters, so the refined
/// result can never be worse than solving at those. Ties break toward
/// smaller `alpha`, then smaller `lambda`.
pub fn optimize_crossover(
    kind: BoundKind,
    comparator: UnconditionalVariant,
    opts: &CrossoverOptions,
) -> Result<CrossoverResult> {
    let (alpha_range, lambda_range) = match kind {
        BoundKind::S | BoundKind::S1 => ((1.0, 2.0), (0.55, 0.95)),
        BoundKind::Zeta => ((0.49123, 1.2), (1.0, 1.9)),
    };
    let solve = |alpha: f64, lambda: f64| -> Option<CrossoverResult> {
        let cp = CompositionParams::new(alpha, lambda, kind);
        solve_crossover(&cp, comparator, opts).ok()
    };

    let reference = CompositionParams::<f64>::reference(kind);
    let mut candidates: Vec<(f64, f64)> = vec![(reference.alpha, reference.lambda)];
    let na = 21;
    let nl = 21;
    for i in 0..na {
        let alpha = alpha_range.0 + (alpha_range.1 - alpha_range.0) * i as f64 / (na - 1) as f64;
        for j in 0..nl {
            let lambda =
                lambda_range.0 + (lambda_range.1 - lambda_range.0) * j as f64 / (nl - 1) as f64;
            candidates.push((alpha, lambda));
        }
    }

    let better = |a: &CrossoverResult, b: &CrossoverResult| {
        (a.x10, a.alpha, a.lambda) < (b.x10, b.alpha, b.lambda)
    };
    let mut best = None::<CrossoverResult>;
    for (alpha, lambda) in candidates {
        if let Some(r) = solve(alpha, lambda) {
            if best.as_ref().is_none_or(|b| better(&r, b)) {
                best = Some(r);
            }
        }
    }
    let mut best = best.ok_or_else(|| {
        Error::NoRoot("no feasible (alpha, lambda) cell produced a crossover".to_string())
    })?;

    // Compass pattern search with shrinking steps.
    let mut step = (0.01, 0.005);
    while step.0 >= 1e-4 || step.1 >= 1e-4 {
        let mut improved = false;
        for (da, dl) in [(step.0, 0.0), (-step.0, 0.0), (0.0, step.1), (0.0, -step.1)] {
            let alpha = (best.alpha + da).clamp(alpha_range.0, alpha_range.1);
            let lambda = (best.lambda + dl).clamp(lambda_range.0, lambda_range.1);
            if let Some(r) = solve(alpha, lambda) {
                if better(&r, &best) {
                    best = r;
                    improved = true;
                }
            }
        }
        if !improved {
            step = (step.0 * 0.5, step.1 * 0.5);
        }
    }
    Ok(best)
}
