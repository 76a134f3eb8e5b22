//! Empirical values against conditional and unconditional bounds.

use super::sfunc::{s1_of_t, s_of_t};
use super::zeros::ZeroTable;
use super::zeta_cl::zeta_modulus;
use crate::bounds::{
    unconditional_bound, BoundKind, HiaryConstant, LogHeight, UnconditionalVariant,
};
use crate::error::Result;
use crate::optimizer::global_constant;

/// One comparison row: `|empirical|` against both bounds at one height.
/// For the zeta rows everything is in value space (the exponent bounds are
/// exponentiated).
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct EmpiricalRow {
    pub t10: f64,
    pub quantity: BoundKind,
    pub empirical: f64,
    pub conditional: f64,
    pub unconditional: f64,
    pub margin_conditional: f64,
    pub margin_unconditional: f64,
}

#[derive(Debug, serde::Serialize)]
pub struct EmpiricalReport {
    pub rows: Vec<EmpiricalRow>,
    pub all_pass: bool,
}

/// Tabulates `S`, `S1` and `|zeta|` on the grid and compares each against the
/// packaged global conditional bound (valid from `2 pi`) and the matching
/// unconditional comparator. Negative margins are recorded, not raised.
pub fn empirical_vs_bounds(
    z: &ZeroTable,
    grid: &[f64],
    hiary: HiaryConstant,
) -> Result<EmpiricalReport> {
    let mut rows = Vec::with_capacity(grid.len() * 3);
    for &t in grid {
        let h = LogHeight::<f64>::from_t(t)?;
        let l = h.ln_t();
        let ll = h.ln_ln_t();

        let s = s_of_t(z, t)?.value.abs();
        let s_cond = global_constant(BoundKind::S) * l / ll;
        let s_unc = unconditional_bound(UnconditionalVariant::MinPlattBpt, h)?;
        rows.push(row(h, BoundKind::S, s, s_cond, s_unc));

        let s1 = s1_of_t(z, t)?.value.abs();
        let s1_cond = global_constant(BoundKind::S1) * l / (ll * ll);
        let s1_unc = unconditional_bound(UnconditionalVariant::S1Explicit, h)?;
        rows.push(row(h, BoundKind::S1, s1, s1_cond, s1_unc));

        let zm = zeta_modulus(t)?.value;
        let z_cond = (global_constant(BoundKind::Zeta) * l / ll).exp();
        let z_unc = unconditional_bound(UnconditionalVariant::Hiary(hiary), h)?.exp();
        rows.push(row(h, BoundKind::Zeta, zm, z_cond, z_unc));
    }
    let all_pass = rows
        .iter()
        .all(|r| r.margin_conditional >= 0.0 && r.margin_unconditional >= 0.0);
    Ok(EmpiricalReport { rows, all_pass })
}

fn row(
    h: LogHeight<f64>,
    quantity: BoundKind,
    empirical: f64,
    conditional: f64,
    unconditional: f64,
) -> EmpiricalRow {
    EmpiricalRow {
        t10: h.log10_t(),
        quantity,
        empirical,
        conditional,
        unconditional,
        margin_conditional: conditional - empirical,
        margin_unconditional: unconditional - empirical,
    }
}
