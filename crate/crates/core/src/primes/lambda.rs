//! Sums of the linearly tapered von Mangoldt weight
//! `Lambda_x(n) = Lambda(n)` for `n <= x` and
//! `Lambda(n) log(x^2/n)/log x` for `x < n <= x^2`.

use super::kahan::KahanSum;
use super::sieve::PrimeSieve;
use crate::error::{Error, Result};

/// Denominator weight applied under `Lambda_x(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaWeight {
    /// `1 / sqrt(n)`
    Sqrt,
    /// `1 / (sqrt(n) log n)`
    SqrtLog,
    /// `1 / (sqrt(n) log^2 n)`
    SqrtLog2,
}

/// Direct sum of `Lambda_x(n) * weight(n)` over prime powers `n <= x^2`.
///
/// Prime powers are enumerated by iterating each prime's exponent until
/// `p^r > x^2`; no factorization is involved.
pub fn lambda_x_sum(s: &PrimeSieve, x: f64, weight: LambdaWeight) -> Result<f64> {
    if x < 2.0 {
        return Err(Error::domain(format!("lambda_x_sum needs x >= 2, got {x}")));
    }
    let x2 = x * x;
    if x2 > s.limit() as f64 {
        return Err(Error::Range(format!(
            "lambda_x_sum needs x^2 <= sieve limit {}, got x^2 = {x2}",
            s.limit()
        )));
    }
    let lx = x.ln();
    let mut k = KahanSum::new();
    for &p in s.primes_upto(x2) {
        let p = p as f64;
        let lp = p.ln();
        let mut n = p;
        let mut ln_n = lp;
        loop {
            // Lambda_x(n): full weight below x, tapered up to x^2.
            let lam = if n <= x {
                lp
            } else {
                lp * (2.0 * lx - ln_n) / lx
            };
            let term = match weight {
                LambdaWeight::Sqrt => lam / n.sqrt(),
                LambdaWeight::SqrtLog => lam / (n.sqrt() * ln_n),
                LambdaWeight::SqrtLog2 => lam / (n.sqrt() * ln_n * ln_n),
            };
            k.add(term);
            if n > x2 / p {
                break;
            }
            n *= p;
            ln_n += lp;
        }
    }
    Ok(k.value())
}
