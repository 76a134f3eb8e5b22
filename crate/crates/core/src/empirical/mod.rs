//! Desk-scale empirical computation of `S(t)`, `S1(t)` and `|zeta(1/2+it)|`
//! from a table of zero ordinates.

mod report;
mod sfunc;
mod theta;
mod zeros;
mod zeta_cl;

pub use report::{empirical_vs_bounds, EmpiricalReport, EmpiricalRow};
pub use sfunc::{s1_of_t, s_of_t, Banded};
pub use theta::{rs_theta, theta_integral, theta_small};
pub use zeros::{load_zeros, ZeroTable, FIRST_ORDINATE, ORDINATE_EPS};
pub use zeta_cl::{euler_maclaurin_zeta, rs_z, zeta_modulus, ZetaModulus};
