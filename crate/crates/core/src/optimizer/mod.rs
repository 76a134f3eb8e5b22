//! Parameter optimization and threshold reproduction.

mod constants;
mod crossover;
mod golden;

pub use constants::{global_constant, verify_global_constants, GlobalConstantsReport};
pub use crossover::{
    default_comparator, optimize_crossover, solve_crossover, CrossoverOptions, CrossoverResult,
};
pub use golden::{minimize_scalar, ScalarMinResult};

use crate::bounds::{selberg_coefficients, BoundKind, LogHeight, SelbergParams};

/// The leading-coefficient objective `b_1(alpha)` (for `S`) or `b_2(alpha)`
/// (for `S1`) as a plain function of `alpha` on `[1, 2]`, with `x0` and `t0`
/// fixed at irrelevant values (`b_k` does not depend on them).
pub fn b_objective(kind: BoundKind, alpha: f64) -> f64 {
    let t0 = LogHeight::<f64>::from_log10(1.0).expect("t0 = 10 is valid");
    let p = SelbergParams::new(alpha, 4.0, t0, kind).expect("alpha in [1,2]");
    selberg_coefficients(&p)
        .expect("coefficients finite on [1,2]")
        .b
}
