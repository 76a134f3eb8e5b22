//! Explicit conditional bounds for `S(t)`, `S1(t)` and `|zeta(1/2+it)|`.
//!
//! The crate has five pieces:
//!
//! * [`bounds`] — closed-form evaluation of every bound, in log-space so that
//!   heights like `10^2465` are exactly representable;
//! * [`primes`] — a sieve and brute-force oracles for the square-root-weighted
//!   prime sums, verifying the six `lemma33` inequalities;
//! * [`quadrature`] — adaptive integration for the `lemma31`/`lemma32`
//!   integral bounds and the principal-value `log |zeta|` constant;
//! * [`optimizer`] — reproduction of the optimized parameters and crossover
//!   thresholds against the unconditional comparators;
//! * [`empirical`] — `S(t)`, `S1(t)` and `|zeta(1/2+it)|` computed from a
//!   table of zero ordinates, compared against the bounds.
//!
//! The formulas in [`bounds`] are generic over the scalar type (any
//! [`real::Real`], i.e. `f32` or `f64`); the rest of the crate and the
//! aliases below fix `f64`.

// Negated comparisons (`!(x > 0.0)`) are used on purpose throughout: they
// route NaN into the domain-error path, which `x <= 0.0` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod empirical;
pub mod error;
pub mod optimizer;
pub mod primes;
pub mod quadrature;
pub mod real;

pub use error::{Error, Result};

/// Scalar type used by everything outside the generic core.
pub type Scalar = f64;

/// `f64` height in log-space.
pub type LogHeight = bounds::LogHeight<f64>;
/// `f64` envelope coefficients.
pub type MCoefficients = bounds::MCoefficients<f64>;
/// `f64` segment-approximation parameters.
pub type SelbergParams = bounds::SelbergParams<f64>;
/// `f64` segment-approximation weights.
pub type SelbergCoefficients = bounds::SelbergCoefficients<f64>;
/// `f64` composition parameters.
pub type CompositionParams = bounds::CompositionParams<f64>;
/// `f64` remainder bound.
pub type RBound = bounds::RBound<f64>;

pub use bounds::{BoundKind, HiaryConstant, UnconditionalVariant};
