//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --release -p zeta-bounds --test acceptance -- --nocapture`.
//! The stated runtime budgets are asserted in optimized builds only; debug
//! builds run the same checks and report the elapsed times.

use std::time::{Duration, Instant};

use zeta_bounds::bounds::{
    gap_c_hat, gap_m_value, m_value, unconditional_bound, CompositionParams, LogHeight,
    MCoefficients, UnconditionalVariant,
};
use zeta_bounds::empirical::{load_zeros, s1_of_t, s_of_t, zeta_modulus, ZeroTable};
use zeta_bounds::optimizer::{
    b_objective, default_comparator, minimize_scalar, solve_crossover, verify_global_constants,
    CrossoverOptions,
};
use zeta_bounds::{BoundKind, HiaryConstant};

fn budget(start: Instant, limit: Duration, what: &str) {
    let elapsed = start.elapsed();
    if cfg!(debug_assertions) {
        eprintln!("  ({what}: {elapsed:?}, budget {limit:?} asserted in release builds)");
    } else {
        assert!(
            elapsed <= limit,
            "{what} took {elapsed:?}, budget {limit:?}"
        );
    }
}

fn h10(x10: f64) -> LogHeight<f64> {
    LogHeight::from_log10(x10).unwrap()
}

#[test]
fn criterion_1_minimization_reproduction() {
    let start = Instant::now();
    let b1 = minimize_scalar(|a| b_objective(BoundKind::S, a), (1.0, 2.0), 1e-6).unwrap();
    let b2 = minimize_scalar(|a| b_objective(BoundKind::S1, a), (1.0, 2.0), 1e-6).unwrap();
    println!(
        "criterion 1: PASS — b1 min {:.6} at {:.5}, b2 min {:.6} at {:.5}",
        b1.min_value, b1.argmin, b2.min_value, b2.argmin
    );
    assert!(
        (b1.argmin - 1.5582).abs() <= 1e-3,
        "b1 argmin {}",
        b1.argmin
    );
    assert!((b1.min_value - 0.54261).abs() <= 5e-4);
    assert!(
        (b2.argmin - 1.4604).abs() <= 1e-3,
        "b2 argmin {}",
        b2.argmin
    );
    assert!((b2.min_value - 0.33696).abs() <= 5e-4);
    budget(start, Duration::from_secs(1), "criterion 1");
}

#[test]
fn criterion_2_crossover_reproduction() {
    let start = Instant::now();
    let opts = CrossoverOptions::default();
    let mut results = Vec::new();
    for (kind, expected, tol) in [
        (BoundKind::S, 2465.0, 1.0),
        (BoundKind::S1, 207.7, 0.5),
        (BoundKind::Zeta, 39.2, 0.5),
    ] {
        let cp = CompositionParams::<f64>::reference(kind);
        let r = solve_crossover(&cp, default_comparator(kind, HiaryConstant::C063), &opts).unwrap();
        results.push((kind, r.x10, expected, tol));
    }
    println!(
        "criterion 2: PASS — thresholds 10^{:.3} / 10^{:.3} / 10^{:.3}",
        results[0].1, results[1].1, results[2].1
    );
    for (kind, got, expected, tol) in results {
        assert!(
            (got - expected).abs() <= tol,
            "{kind}: x10 = {got}, expected {expected} +- {tol}"
        );
    }
    budget(start, Duration::from_secs(10), "criterion 2");
}

#[test]
fn criterion_3_packaged_values_and_global_constants() {
    let start = Instant::now();
    // Packaged M-values at their thresholds.
    let checks = [
        (MCoefficients::<f64>::packaged_s(), 2465.0, 0.96),
        (MCoefficients::<f64>::packaged_s1(), 208.0, 2.488),
        (MCoefficients::<f64>::packaged_zeta(), 40.0, 0.95),
    ];
    for (coef, x10, limit) in checks {
        let m = m_value(&coef, h10(x10)).unwrap();
        assert!(m <= limit, "M = {m} > {limit} at 10^{x10}");
    }
    // Sub-threshold comparator scans on 10^4-point log grids.
    let reports: Vec<_> = [BoundKind::S, BoundKind::S1, BoundKind::Zeta]
        .into_iter()
        .map(|k| verify_global_constants(k, 10_000, HiaryConstant::C063).unwrap())
        .collect();
    let all = reports.iter().all(|r| r.all_pass);
    println!(
        "criterion 3: {} — M-values pass; scans: S {} (max ratio {:.6}), S1 {} (max ratio {:.6} at 10^{:.2}), ZETA {} (max ratio {:.6} at 10^{:.2})",
        if all { "PASS" } else { "FAIL" },
        if reports[0].scan_pass { "pass" } else { "FAIL" },
        reports[0].scan_max_ratio,
        if reports[1].scan_pass { "pass" } else { "FAIL" },
        reports[1].scan_max_ratio,
        reports[1].scan_max_at_x10,
        if reports[2].scan_pass { "pass" } else { "FAIL" },
        reports[2].scan_max_ratio,
        reports[2].scan_max_at_x10,
    );
    budget(start, Duration::from_secs(5), "criterion 3");
    for r in &reports {
        assert!(
            r.threshold_pass,
            "{}: threshold M-value exceeds the constant",
            r.kind
        );
        // Known reproduction gap: the S1 and ZETA constants are slightly too
        // small to dominate their comparators just below the thresholds
        // (ratios peak near 1.0008 and 1.0034). The criterion is asserted
        // as stated and fails honestly for those two kinds.
        assert!(
            r.scan_pass,
            "{}: sub-threshold scan fails at {} of {} points (first at 10^{:.3}, max ratio {:.6} at 10^{:.3})",
            r.kind,
            r.scan_violations,
            r.scan_points,
            r.first_violation_x10.unwrap_or(f64::NAN),
            r.scan_max_ratio,
            r.scan_max_at_x10,
        );
    }
}

#[test]
fn criterion_4_gap_reproduction() {
    let start = Instant::now();
    let m = gap_m_value(h10(2465.0)).unwrap();
    let c_hat = gap_c_hat(0.9581, h10(2465.0)).unwrap();
    println!("criterion 4: PASS — gap coefficient {m:.4}, c-hat {c_hat:.4}");
    assert!((m - 12.05).abs() <= 0.01, "gap coefficient {m}");
    assert!(c_hat <= 12.05, "c-hat {c_hat}");
    budget(start, Duration::from_secs(1), "criterion 4");
}

#[test]
fn criterion_5_prime_sum_property_suite() {
    let start = Instant::now();
    let sieve = zeta_bounds::primes::build_sieve(10_000_000).unwrap();
    let grid: Vec<f64> = (0..200)
        .map(|i| 2.0 * (1e7f64 / 2.0).powf(i as f64 / 199.0))
        .collect();
    let rep = zeta_bounds::primes::verify_lemma33(&sieve, &grid).unwrap();
    println!(
        "criterion 5: {} — {} checks across 200 grid points",
        if rep.all_pass { "PASS" } else { "FAIL" },
        rep.rows.len()
    );
    assert!(
        rep.all_pass,
        "failures: {:?}",
        rep.failures().take(5).collect::<Vec<_>>()
    );
    // Sanity envelope on theta itself.
    for &x in &grid {
        let theta = zeta_bounds::primes::chebyshev_theta(&sieve, x).unwrap();
        assert!(theta < x, "theta({x}) = {theta} >= x");
        if x >= 1e5 {
            assert!(
                (theta / x - 1.0).abs() <= 0.05,
                "theta({x})/x = {}",
                theta / x
            );
        }
    }
    budget(start, Duration::from_secs(60), "criterion 5");
}

#[test]
fn criterion_6_integral_lemmas() {
    let start = Instant::now();
    let grid: Vec<f64> = (0..100)
        .map(|i| (2.0 + 1e-6) * (1e12f64 / (2.0 + 1e-6)).powf(i as f64 / 99.0))
        .collect();
    let desk31 = zeta_bounds::quadrature::scan_lemma_lhs(3, &grid, 1e-10).unwrap();
    let desk32 = zeta_bounds::quadrature::scan_lemma_lhs(4, &grid, 1e-10).unwrap();
    let far: Vec<f64> = (0..100).map(|i| 26.0 + 74.0 * i as f64 / 99.0).collect();
    let par31 = zeta_bounds::quadrature::scan_lemma_parametric(3, &far).unwrap();
    let par32 = zeta_bounds::quadrature::scan_lemma_parametric(4, &far).unwrap();
    let all = desk31.all_pass && desk32.all_pass && par31.all_pass && par32.all_pass;
    println!(
        "criterion 6: {} — quadrature maxima {:.4} / {:.4}, parametric maxima {:.4} / {:.4}",
        if all { "PASS" } else { "FAIL" },
        desk31.max_lhs,
        desk32.max_lhs,
        par31.max_lhs,
        par32.max_lhs
    );
    assert!(desk31.all_pass && desk31.max_lhs <= 23.1);
    assert!(desk32.all_pass && desk32.max_lhs <= 132.6);
    assert!(par31.all_pass && par31.max_lhs <= 23.1);
    assert!(par32.all_pass && par32.max_lhs <= 132.6);
    budget(start, Duration::from_secs(30), "criterion 6");
}

#[test]
fn criterion_7_principal_value_constant() {
    let start = Instant::now();
    // Stability to 1e-4 under excision halving is enforced inside the
    // evaluation; a failure would be a NonConvergence error.
    let v = zeta_bounds::quadrature::pv_logzeta_integral(1e-4).unwrap();
    let ratio = v.abs() / std::f64::consts::PI;
    println!("criterion 7: PASS — p.v. integral {v:.8}, |v|/pi = {ratio:.6}");
    assert!(ratio <= 0.82, "|v|/pi = {ratio}");
    budget(start, Duration::from_secs(5), "criterion 7");
}

fn zeros_table() -> ZeroTable {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros_10k.txt");
    load_zeros(path)
        .unwrap_or_else(|e| panic!("criterion 8 needs the bundled zero table at {path}: {e}"))
}

#[test]
fn criterion_8_empirical_sanity() {
    let start = Instant::now();
    let table = zeros_table();
    assert!(
        table.count() >= 10_000,
        "need >= 10^4 ordinates, have {}",
        table.count()
    );
    let t_max = table.max_ordinate().unwrap();
    let grid: Vec<f64> = (0..1000)
        .map(|i| 10.0 * (t_max / 10.0).powf(i as f64 / 999.0))
        .collect();

    let mut worst_margin = f64::INFINITY;
    for &t in &grid {
        let h = LogHeight::<f64>::from_t(t).unwrap();
        let l = h.ln_t();
        let ll = h.ln_ln_t();

        let s = s_of_t(&table, t).unwrap().value.abs();
        let s_unc = unconditional_bound(UnconditionalVariant::MinPlattBpt, h).unwrap();
        assert!(s <= s_unc, "|S({t})| = {s} > {s_unc}");
        assert!(s <= 0.96 * l / ll, "|S({t})| above the global constant");

        let s1 = s1_of_t(&table, t).unwrap().value.abs();
        assert!(s1 <= 0.059 * l + 3.054, "|S1({t})| = {s1}");
        assert!(s1 <= 2.488 * l / (ll * ll));

        let z = zeta_modulus(t).unwrap().value;
        let z_unc = 0.63 * t.powf(1.0 / 6.0) * l;
        assert!(z <= z_unc, "|zeta| at {t}: {z} > {z_unc}");
        assert!(z.ln() <= 0.95 * l / ll, "zeta exponent at {t}");

        worst_margin = worst_margin.min(s_unc - s);
    }

    let s100 = s_of_t(&table, 100.0).unwrap().value;
    println!(
        "criterion 8: PASS — 1000 heights in [10, {t_max:.1}], S(100) = {s100:.6}, min S margin {worst_margin:.4}"
    );
    assert!((s100 - (-0.006)).abs() <= 0.01, "S(100) = {s100}");
    budget(start, Duration::from_secs(30), "criterion 8");
}
