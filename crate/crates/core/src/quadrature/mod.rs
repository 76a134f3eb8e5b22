//! Adaptive numerical integration and the integral-bound verifications.

mod adaptive;
mod integral_lemmas;
mod pv;
mod zeta_real;

pub use adaptive::{adaptive_integral, fixed_simpson, IntegralResult, MAX_DEPTH};
pub use integral_lemmas::{
    lemma31_lhs, lemma31_parametric_rhs, lemma31_x0_choice, lemma32_lhs, lemma32_parametric_rhs,
    lemma32_x0_choice, scan_lemma_lhs, scan_lemma_parametric, LemmaScanReport, LemmaScanRow,
    LEMMA31_CONSTANT, LEMMA32_CONSTANT,
};
pub use pv::pv_logzeta_integral;
pub use zeta_real::RealZeta;
