//! Direct prime sums and the transcribed right-hand sides of the six
//! square-root-weighted inequalities (the `lemma33` family), plus the
//! Chebyshev theta deviation bound that drives them.

use super::kahan::KahanSum;
use super::sieve::PrimeSieve;
use crate::error::{Error, Result};

use std::f64::consts::PI;

/// The six sums, in display order. `LOGRATIO` kinds carry a `log(X/p)` weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeSumKind {
    /// `sum log p / sqrt(p)`
    LogpSqrt,
    /// `sum log p log(X/p) / sqrt(p)`
    LogpLogratioSqrt,
    /// `sum 1 / sqrt(p)`
    InvSqrt,
    /// `sum 1 / (sqrt(p) log p)`
    InvSqrtLog,
    /// `sum log(X/p) / sqrt(p)`
    LogratioSqrt,
    /// `sum log(X/p) / (sqrt(p) log p)`
    LogratioSqrtLog,
}

pub const ALL_PRIME_SUM_KINDS: [PrimeSumKind; 6] = [
    PrimeSumKind::LogpSqrt,
    PrimeSumKind::LogpLogratioSqrt,
    PrimeSumKind::InvSqrt,
    PrimeSumKind::InvSqrtLog,
    PrimeSumKind::LogratioSqrt,
    PrimeSumKind::LogratioSqrtLog,
];

impl PrimeSumKind {
    pub fn name(self) -> &'static str {
        match self {
            PrimeSumKind::LogpSqrt => "logp_sqrt",
            PrimeSumKind::LogpLogratioSqrt => "logp_logratio_sqrt",
            PrimeSumKind::InvSqrt => "inv_sqrt",
            PrimeSumKind::InvSqrtLog => "inv_sqrt_log",
            PrimeSumKind::LogratioSqrt => "logratio_sqrt",
            PrimeSumKind::LogratioSqrtLog => "logratio_sqrt_log",
        }
    }
}

impl std::fmt::Display for PrimeSumKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Chebyshev `theta(X) = sum_{p <= X} log p`, compensated.
pub fn chebyshev_theta(s: &PrimeSieve, x: f64) -> Result<f64> {
    s.check_range(x, "theta(X)")?;
    let mut k = KahanSum::new();
    for &p in s.primes_upto(x) {
        k.add((p as f64).ln());
    }
    Ok(k.value())
}

/// Direct compensated evaluation of the selected sum over `p <= X`.
pub fn prime_sum(s: &PrimeSieve, kind: PrimeSumKind, x: f64) -> Result<f64> {
    if x < 2.0 {
        return Err(Error::domain(format!("prime sums need X >= 2, got {x}")));
    }
    s.check_range(x, "prime sum")?;
    let lx = x.ln();
    let mut k = KahanSum::new();
    for &p in s.primes_upto(x) {
        let p = p as f64;
        let sq = p.sqrt();
        let lp = p.ln();
        let term = match kind {
            PrimeSumKind::LogpSqrt => lp / sq,
            PrimeSumKind::LogpLogratioSqrt => lp * (lx - lp) / sq,
            PrimeSumKind::InvSqrt => 1.0 / sq,
            PrimeSumKind::InvSqrtLog => 1.0 / (sq * lp),
            PrimeSumKind::LogratioSqrt => (lx - lp) / sq,
            PrimeSumKind::LogratioSqrtLog => (lx - lp) / (sq * lp),
        };
        k.add(term);
    }
    Ok(k.value())
}

/// Transcribed right-hand side of the inequality for `kind` at `X`.
pub fn lemma33_rhs(kind: PrimeSumKind, x: f64) -> Result<f64> {
    if x < 2.0 {
        return Err(Error::domain(format!(
            "the inequalities are stated for X >= 2, got {x}"
        )));
    }
    let sx = x.sqrt();
    let l = x.ln();
    let (l2, l3, l4) = (l * l, l * l * l, l * l * l * l);
    Ok(match kind {
        PrimeSumKind::LogpSqrt => 2.0 * sx + l3 / (48.0 * PI) + l2 / (8.0 * PI) - 1.41,
        PrimeSumKind::LogpLogratioSqrt => {
            4.0 * sx + l4 / (192.0 * PI) + l3 / (24.0 * PI) - 1.416 * l - 4.679
        }
        PrimeSumKind::InvSqrt => {
            2.0 * sx / l + 4.0 * sx / l2 + 184.8 * sx / l3 + l2 / (32.0 * PI) + l / (4.0 * PI)
                - 13.84
        }
        PrimeSumKind::InvSqrtLog => {
            2.0 * sx / l2 + 92.4 * sx / l3 + l / (16.0 * PI) + l.ln() / (4.0 * PI) - 2.888
        }
        PrimeSumKind::LogratioSqrt => {
            4.0 * sx / l + 184.8 * sx / l2 + l3 / (96.0 * PI) + l2 / (8.0 * PI) - 13.84 * l + 1.417
        }
        PrimeSumKind::LogratioSqrtLog => {
            4.0 * sx / l2 + 3166.4 * sx / l3 + l2 / (32.0 * PI) + l * l.ln() / (4.0 * PI)
                - 36.94 * l
                + 81.8
        }
    })
}

/// Theta deviation bound `theta(X) - X <= sqrt(X) log^2 X / (8 pi)`.
pub fn theta_deviation_rhs(x: f64) -> f64 {
    x.sqrt() * x.ln().powi(2) / (8.0 * PI)
}

/// One checked inequality instance.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SumCheckRow {
    pub x: f64,
    pub check: SumCheck,
    pub direct: f64,
    pub rhs: f64,
    /// `rhs - direct`; nonnegative iff the inequality holds.
    pub margin: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumCheck {
    Sum(PrimeSumKind),
    ThetaDeviation,
}

/// Grid verification report for the six sums plus the theta deviation.
#[derive(Debug, serde::Serialize)]
pub struct SumCheckReport {
    pub rows: Vec<SumCheckRow>,
    pub all_pass: bool,
}

impl SumCheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &SumCheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Checks every inequality at every grid point. Failures are recorded in the
/// report, never raised.
pub fn verify_lemma33(s: &PrimeSieve, grid: &[f64]) -> Result<SumCheckReport> {
    if let Some(&mx) = grid.iter().max_by(|a, b| a.total_cmp(b)) {
        s.check_range(mx, "lemma33 grid")?;
    }
    let mut rows = Vec::with_capacity(grid.len() * 7);
    for &x in grid {
        for kind in ALL_PRIME_SUM_KINDS {
            let direct = prime_sum(s, kind, x)?;
            let rhs = lemma33_rhs(kind, x)?;
            rows.push(SumCheckRow {
                x,
                check: SumCheck::Sum(kind),
                direct,
                rhs,
                margin: rhs - direct,
                pass: direct <= rhs,
            });
        }
        let dev = chebyshev_theta(s, x)? - x;
        let rhs = theta_deviation_rhs(x);
        rows.push(SumCheckRow {
            x,
            check: SumCheck::ThetaDeviation,
            direct: dev,
            rhs,
            margin: rhs - dev,
            pass: dev <= rhs,
        });
    }
    let all_pass = rows.iter().all(|r| r.pass);
    Ok(SumCheckReport { rows, all_pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::build_sieve;

    #[test]
    fn theta_small_values() {
        let s = build_sieve(1000).unwrap();
        // theta(10) = ln(2*3*5*7) = ln 210.
        let t10 = chebyshev_theta(&s, 10.0).unwrap();
        assert!((t10 - 210.0f64.ln()).abs() < 1e-12);
        // Empty sum below the first prime.
        assert_eq!(chebyshev_theta(&s, 1.5).unwrap(), 0.0);
        // Frozen direct sum over the 25 primes below 100.
        let t100 = chebyshev_theta(&s, 100.0).unwrap();
        assert!(
            (t100 - 83.728_390_399_063_92).abs() < 1e-10,
            "theta(100) = {t100}"
        );
        // Out of sieve range.
        assert!(chebyshev_theta(&s, 2000.0).is_err());
    }

    #[test]
    fn prime_sum_frozen_values() {
        let s = build_sieve(1000).unwrap();
        let v = prime_sum(&s, PrimeSumKind::LogpSqrt, 10.0).unwrap();
        assert!((v - 2.579_660_591_896_436_4).abs() < 1e-12, "sum = {v}");
        // Single vanishing term at X = 2 for the log-ratio weight.
        let v2 = prime_sum(&s, PrimeSumKind::LogratioSqrt, 2.0).unwrap();
        assert_eq!(v2, 0.0);
        let v3 = prime_sum(&s, PrimeSumKind::InvSqrt, 100.0).unwrap();
        assert!((v3 - 5.536_481_852_598_516).abs() < 1e-12, "sum = {v3}");
        assert!(prime_sum(&s, PrimeSumKind::InvSqrt, 1.0).is_err());
    }

    #[test]
    fn rhs_frozen_values() {
        let r = lemma33_rhs(PrimeSumKind::LogpSqrt, 10.0).unwrap();
        assert!((r - 5.206_468_432_241_504).abs() < 1e-12, "rhs = {r}");
        // Leading terms as displayed.
        let x: f64 = 1e8;
        let r2 = lemma33_rhs(PrimeSumKind::LogpLogratioSqrt, x).unwrap();
        assert!((r2 / (4.0 * x.sqrt()) - 1.0).abs() < 0.02);
        // The sixth inequality carries the 3166.4 sqrt(X)/log^3 X term.
        let lo = lemma33_rhs(PrimeSumKind::LogratioSqrtLog, 64.0).unwrap();
        let without = 4.0 * 8.0 / 64.0f64.ln().powi(2)
            + 64.0f64.ln().powi(2) / (32.0 * std::f64::consts::PI)
            + 64.0f64.ln() * 64.0f64.ln().ln() / (4.0 * std::f64::consts::PI)
            - 36.94 * 64.0f64.ln()
            + 81.8;
        let coef = (lo - without) * 64.0f64.ln().powi(3) / 8.0;
        assert!((coef - 3166.4).abs() < 1e-9);
        assert!(lemma33_rhs(PrimeSumKind::LogpSqrt, 1.5).is_err());
    }

    #[test]
    fn verify_small_grid_passes() {
        let s = build_sieve(100_000).unwrap();
        let grid: Vec<f64> = (0..=5).map(|i| 10.0f64.powi(i).max(2.0)).collect();
        let rep = verify_lemma33(&s, &grid).unwrap();
        assert!(
            rep.all_pass,
            "failures: {:?}",
            rep.failures().collect::<Vec<_>>()
        );
        assert_eq!(rep.rows.len(), grid.len() * 7);
        // Margins are nonnegative exactly when pass.
        for r in &rep.rows {
            assert_eq!(r.pass, r.margin >= 0.0);
        }
    }

    #[test]
    fn verify_edge_grids() {
        let s = build_sieve(100).unwrap();
        let rep = verify_lemma33(&s, &[2.0]).unwrap();
        assert!(rep.all_pass);
        let empty = verify_lemma33(&s, &[]).unwrap();
        assert!(empty.rows.is_empty() && empty.all_pass);
        assert!(verify_lemma33(&s, &[1e9]).is_err());
    }

    #[test]
    fn compensated_sum_direction_agreement() {
        let s = build_sieve(10_000_000).unwrap();
        let forward: f64 = {
            let mut k = crate::primes::KahanSum::new();
            for &p in s.primes() {
                k.add(1.0 / (p as f64).sqrt());
            }
            k.value()
        };
        let backward: f64 = {
            let mut k = crate::primes::KahanSum::new();
            for &p in s.primes().iter().rev() {
                k.add(1.0 / (p as f64).sqrt());
            }
            k.value()
        };
        assert!(((forward - backward) / forward).abs() < 1e-13);
    }
}
