//! Bit-packed odd-only sieve of Eratosthenes.

use crate::error::{Error, Result};

/// Default ceiling on sieve construction; 10^8 sieves in seconds and covers
/// every verification grid used here.
pub const DEFAULT_LIMIT_CAP: u64 = 100_000_000;

/// Read-only list of all primes up to a limit.
#[derive(Debug)]
pub struct PrimeSieve {
    limit: u64,
    primes: Vec<u32>,
}

/// Builds the complete prime list up to `limit` (inclusive).
pub fn build_sieve(limit: u64) -> Result<PrimeSieve> {
    build_sieve_capped(limit, DEFAULT_LIMIT_CAP)
}

/// As [`build_sieve`] with an explicit memory cap.
pub fn build_sieve_capped(limit: u64, cap: u64) -> Result<PrimeSieve> {
    if limit < 2 {
        return Err(Error::domain(format!(
            "sieve limit must be >= 2, got {limit}"
        )));
    }
    if limit > cap {
        return Err(Error::Resource(format!(
            "sieve limit {limit} exceeds the configured cap {cap}"
        )));
    }
    // Odd-only bitmap: bit i represents 2i + 3.
    let n_odd = ((limit.saturating_sub(1)) / 2) as usize; // count of odd numbers >= 3 up to limit
    let mut composite = vec![0u64; n_odd / 64 + 1];
    let is_set = |v: &[u64], i: usize| v[i / 64] & (1u64 << (i % 64)) != 0;
    let mut i = 0usize;
    loop {
        let p = 2 * i as u64 + 3;
        if p * p > limit {
            break;
        }
        if !is_set(&composite, i) {
            let mut m = (p * p - 3) / 2;
            while m < n_odd as u64 {
                composite[(m / 64) as usize] |= 1u64 << (m % 64);
                m += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(estimate_pi(limit));
    primes.push(2);
    for i in 0..n_odd {
        if !is_set(&composite, i) {
            primes.push((2 * i + 3) as u32);
        }
    }
    Ok(PrimeSieve { limit, primes })
}

fn estimate_pi(limit: u64) -> usize {
    let x = limit as f64;
    (x / x.ln() * 1.2) as usize + 16
}

impl PrimeSieve {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Primes `p <= x`, ascending.
    pub fn primes_upto(&self, x: f64) -> &[u32] {
        let n = self.primes.partition_point(|&p| p as f64 <= x);
        &self.primes[..n]
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub(crate) fn check_range(&self, x: f64, what: &str) -> Result<()> {
        if x > self.limit as f64 {
            return Err(Error::Range(format!(
                "{what} needs X <= sieve limit {}, got X = {x}",
                self.limit
            )));
        }
        Ok(())
    }
}
