//! Sieve-based brute-force oracles for the prime sums behind the envelopes.

mod aux;
mod kahan;
mod lambda;
mod sieve;
mod sums;

pub use aux::{auxiliary_prime_bounds, AuxCheckRow, AuxiliaryReport};
pub use kahan::KahanSum;
pub use lambda::{lambda_x_sum, LambdaWeight};
pub use sieve::{build_sieve, build_sieve_capped, PrimeSieve, DEFAULT_LIMIT_CAP};
pub use sums::{
    chebyshev_theta, lemma33_rhs, prime_sum, theta_deviation_rhs, verify_lemma33, PrimeSumKind,
    SumCheck, SumCheckReport, SumCheckRow, ALL_PRIME_SUM_KINDS,
};
