use crate::output::{csv_num, csv_table, round_sig, to_json, Format};
use crate::{Cli, Command, CrossoverArgs, EmpiricalArgs, EvalArgs, OptimizeArgs, VerifyTarget};

use anyhow::Context;
use rayon::prelude::*;
use serde_json::json;
use zeta_bounds::bounds::{
    conditional_m_value, m_value, selberg_coefficients, unconditional_bound, CompositionParams,
    LogHeight, MCoefficients, SelbergParams, UnconditionalVariant,
};
use zeta_bounds::optimizer::{
    default_comparator, optimize_crossover, solve_crossover, verify_global_constants,
    CrossoverOptions,
};
use zeta_bounds::{BoundKind, HiaryConstant};

pub fn run(cli: Cli) -> anyhow::Result<i32> {
    let format = cli.format;
    match cli.command {
        Command::Eval(args) => cmd_eval(args, format),
        Command::Verify { target } => cmd_verify(target, format),
        Command::Crossover(args) => cmd_crossover(args, format),
        Command::Optimize(args) => cmd_optimize(args, format),
        Command::Empirical(args) => cmd_empirical(args, format),
    }
}

fn comparator_values(
    kind: BoundKind,
    h: LogHeight<f64>,
    hiary: HiaryConstant,
) -> anyhow::Result<(serde_json::Value, f64)> {
    Ok(match kind {
        BoundKind::S => {
            let platt = unconditional_bound(UnconditionalVariant::Platt, h)?;
            let bpt = unconditional_bound(UnconditionalVariant::Bpt, h)?;
            let min = platt.min(bpt);
            (json!({"platt": platt, "bpt": bpt, "min": min}), min)
        }
        BoundKind::S1 => {
            let v = unconditional_bound(UnconditionalVariant::S1Explicit, h)?;
            (json!({"s1_explicit": v}), v)
        }
        BoundKind::Zeta => {
            let v = unconditional_bound(UnconditionalVariant::Hiary(hiary), h)?;
            (json!({"hiary_log": v}), v)
        }
    })
}

fn eval_point(
    kind: BoundKind,
    t10: f64,
    alpha: f64,
    lambda: f64,
    hiary: HiaryConstant,
) -> anyhow::Result<serde_json::Value> {
    let h = LogHeight::<f64>::from_log10(t10)?;
    let l = h.ln_t();
    let ll = h.ln_ln_t();
    let scale = match kind.loglog_power() {
        1 => l / ll,
        _ => l / (ll * ll),
    };

    let coef = MCoefficients::<f64>::packaged(kind);
    let packaged = match m_value(&coef, h) {
        Ok(m) => json!({
            "a": coef.a, "b": coef.b, "c": coef.c, "t_min_log10": coef.t_min_log10,
            "m_value": m, "bound": m * scale,
        }),
        Err(_) => serde_json::Value::Null,
    };

    let cp = CompositionParams::new(alpha, lambda, kind);
    let m =
        conditional_m_value(&cp, h).with_context(|| format!("conditional bound at t10 = {t10}"))?;
    let coefficients = match kind {
        BoundKind::Zeta => serde_json::Value::Null,
        _ => {
            let p = SelbergParams::new(alpha, m.x, h, kind)?;
            serde_json::to_value(selberg_coefficients(&p)?)?
        }
    };
    let conditional = json!({
        "alpha": alpha, "lambda": lambda,
        "m_a": m.a, "m_b": m.b, "m_c": m.c,
        "m_value": m.value, "bound": m.value * scale,
        "x": m.x, "envelope": m.envelope,
        "coefficients": coefficients,
    });

    let (comparators, best) = comparator_values(kind, h, hiary)?;
    Ok(json!({
        "kind": kind, "t10": t10,
        "packaged": packaged,
        "conditional": conditional,
        "comparators": comparators,
        "margin_vs_comparator": best - m.value * scale,
    }))
}

fn cmd_eval(args: EvalArgs, format: Format) -> anyhow::Result<i32> {
    let kind: BoundKind = args.kind.into();
    let reference = CompositionParams::<f64>::reference(kind);
    let alpha = args.alpha.unwrap_or(reference.alpha);
    let lambda = args.lambda.unwrap_or(reference.lambda);
    let heights = match (&args.grid, args.t10) {
        (Some(g), _) => g.values(),
        (None, Some(t10)) => vec![t10],
        (None, None) => unreachable!("clap enforces t10 xor grid"),
    };
    let rows = heights
        .par_iter()
        .map(|&t10| eval_point(kind, t10, alpha, lambda, args.hiary))
        .collect::<anyhow::Result<Vec<_>>>()?;

    let report = json!({"command": "eval", "kind": kind, "rows": rows});
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Csv => {
            let lines = report["rows"].as_array().unwrap().iter().map(|r| {
                format!(
                    "{},{},{},{},{}",
                    csv_num(r["t10"].as_f64().unwrap()),
                    r["kind"].as_str().unwrap(),
                    csv_num(r["conditional"]["m_value"].as_f64().unwrap()),
                    csv_num(r["conditional"]["bound"].as_f64().unwrap()),
                    csv_num(r["margin_vs_comparator"].as_f64().unwrap()),
                )
            });
            print!(
                "{}",
                csv_table("t10,kind,m_value,bound,margin_vs_comparator", lines)
            );
        }
        Format::Text => {
            for r in report["rows"].as_array().unwrap() {
                println!(
                    "{} t10={} m={:.6} bound={:.6e} margin={:.3e}",
                    r["kind"].as_str().unwrap(),
                    r["t10"],
                    r["conditional"]["m_value"].as_f64().unwrap(),
                    r["conditional"]["bound"].as_f64().unwrap(),
                    r["margin_vs_comparator"].as_f64().unwrap(),
                );
            }
        }
    }
    Ok(0)
}

fn cmd_verify(target: VerifyTarget, format: Format) -> anyhow::Result<i32> {
    match target {
        VerifyTarget::Lemma33 {
            max,
            points,
            sieve_limit,
        } => {
            if !(max >= 2.0) {
                anyhow::bail!("domain error: lemma33 grid needs max >= 2");
            }
            let sieve = zeta_bounds::primes::build_sieve_capped(max.ceil() as u64, sieve_limit)?;
            let grid: Vec<f64> = log_grid(2.0, max, points);
            // Points verify independently; merge preserves grid order.
            let rows: Vec<_> = grid
                .par_chunks(16)
                .map(|chunk| zeta_bounds::primes::verify_lemma33(&sieve, chunk).map(|r| r.rows))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .collect();
            let all_pass = rows.iter().all(|r| r.pass);
            let report = json!({
                "command": "verify lemma33", "max": max, "points": points,
                "all_pass": all_pass,
                "failures": rows.iter().filter(|r| !r.pass).collect::<Vec<_>>(),
                "rows": rows,
            });
            emit_check_report(&report, format, all_pass, |r| {
                let rows = r["rows"].as_array().unwrap();
                let lines = rows.iter().map(|x| {
                    format!(
                        "{},{},{},{},{}",
                        csv_num(x["x"].as_f64().unwrap()),
                        check_name(&x["check"]),
                        csv_num(x["direct"].as_f64().unwrap()),
                        csv_num(x["rhs"].as_f64().unwrap()),
                        x["pass"],
                    )
                });
                csv_table("x,check,direct,rhs,pass", lines)
            })
        }
        VerifyTarget::Lemma31 { max, points, tol } | VerifyTarget::Lemma32 { max, points, tol } => {
            let k = if matches!(target, VerifyTarget::Lemma31 { .. }) {
                3
            } else {
                4
            };
            let grid = log_grid(2.0 + 1e-6, max, points);
            let desk = zeta_bounds::quadrature::scan_lemma_lhs(k, &grid, tol)?;
            let far_grid: Vec<f64> = linear_grid(26.0, 100.0, points);
            let parametric = zeta_bounds::quadrature::scan_lemma_parametric(k, &far_grid)?;
            let all_pass = desk.all_pass && parametric.all_pass;
            let report = json!({
                "command": format!("verify lemma3{}", k - 2),
                "max": max, "points": points,
                "constant": if k == 3 { 23.1 } else { 132.6 },
                "max_lhs": desk.max_lhs,
                "parametric_max": parametric.max_lhs,
                "all_pass": all_pass,
                "rows": desk.rows,
            });
            emit_check_report(&report, format, all_pass, |r| {
                let lines = r["rows"].as_array().unwrap().iter().map(|x| {
                    format!(
                        "{},{},{}",
                        csv_num(x["x"].as_f64().unwrap()),
                        csv_num(x["lhs"].as_f64().unwrap()),
                        x["pass"],
                    )
                });
                csv_table("x,lhs,pass", lines)
            })
        }
        VerifyTarget::Aux { max, sieve_limit } => {
            let sieve = zeta_bounds::primes::build_sieve_capped(max.ceil() as u64, sieve_limit)?;
            let rep = zeta_bounds::primes::auxiliary_prime_bounds(&sieve, max)?;
            let all_pass = rep.all_pass;
            let report = json!({"command": "verify aux", "max": max, "all_pass": all_pass, "rows": rep.rows});
            emit_check_report(&report, format, all_pass, |r| {
                let lines = r["rows"].as_array().unwrap().iter().map(|x| {
                    format!(
                        "{},{},{},{}",
                        x["name"].as_str().unwrap(),
                        csv_num(x["value"].as_f64().unwrap()),
                        csv_num(x["limit"].as_f64().unwrap()),
                        x["pass"],
                    )
                });
                csv_table("name,value,limit,pass", lines)
            })
        }
        VerifyTarget::Pv { tol } => {
            let v = zeta_bounds::quadrature::pv_logzeta_integral(tol)?;
            let ratio = v.abs() / std::f64::consts::PI;
            let pass = ratio <= 0.82;
            let report = json!({
                "command": "verify pv", "tol": tol,
                "value": v, "abs_over_pi": ratio, "limit": 0.82, "all_pass": pass,
            });
            emit_check_report(&report, format, pass, |r| {
                csv_table(
                    "value,abs_over_pi,limit,pass",
                    [format!(
                        "{},{},0.82,{}",
                        csv_num(r["value"].as_f64().unwrap()),
                        csv_num(r["abs_over_pi"].as_f64().unwrap()),
                        r["all_pass"],
                    )],
                )
            })
        }
        VerifyTarget::Constants { points, hiary } => {
            let reports = [BoundKind::S, BoundKind::S1, BoundKind::Zeta]
                .into_iter()
                .map(|kind| verify_global_constants(kind, points, hiary))
                .collect::<Result<Vec<_>, _>>()?;
            let all_pass = reports.iter().all(|r| r.all_pass);
            let report = json!({"command": "verify constants", "points": points, "all_pass": all_pass, "kinds": reports});
            emit_check_report(&report, format, all_pass, |r| {
                let lines = r["kinds"].as_array().unwrap().iter().map(|x| {
                    format!(
                        "{},{},{},{},{},{}",
                        x["kind"].as_str().unwrap(),
                        csv_num(x["constant"].as_f64().unwrap()),
                        csv_num(x["m_at_threshold"].as_f64().unwrap()),
                        x["threshold_pass"],
                        csv_num(x["scan_max_ratio"].as_f64().unwrap()),
                        x["scan_pass"],
                    )
                });
                csv_table(
                    "kind,constant,m_at_threshold,threshold_pass,scan_max_ratio,scan_pass",
                    lines,
                )
            })
        }
    }
}

fn check_name(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Object(map) => map
            .get("sum")
            .and_then(|s| s.as_str())
            .map(|s| s.to_string())
            .unwrap_or_else(|| v.to_string()),
        other => other.to_string(),
    }
}

fn emit_check_report(
    report: &serde_json::Value,
    format: Format,
    all_pass: bool,
    csv: impl Fn(&serde_json::Value) -> String,
) -> anyhow::Result<i32> {
    match format {
        Format::Json => println!("{}", to_json(report)?),
        Format::Csv => print!("{}", csv(report)),
        Format::Text => {
            println!(
                "{}: {}",
                report["command"].as_str().unwrap(),
                if all_pass { "PASS" } else { "FAIL" }
            );
            if let Some(max_lhs) = report.get("max_lhs").and_then(|v| v.as_f64()) {
                println!(
                    "  max lhs {} vs constant {}",
                    round_sig(max_lhs),
                    report["constant"]
                );
            }
            if let Some(kinds) = report.get("kinds").and_then(|v| v.as_array()) {
                for k in kinds {
                    println!(
                        "  {}: threshold {} (m = {}), scan {} (max ratio {})",
                        k["kind"].as_str().unwrap(),
                        if k["threshold_pass"].as_bool().unwrap() {
                            "PASS"
                        } else {
                            "FAIL"
                        },
                        round_sig(k["m_at_threshold"].as_f64().unwrap()),
                        if k["scan_pass"].as_bool().unwrap() {
                            "PASS"
                        } else {
                            "FAIL"
                        },
                        round_sig(k["scan_max_ratio"].as_f64().unwrap()),
                    );
                }
            }
            if let Some(fails) = report.get("failures").and_then(|v| v.as_array()) {
                for f in fails.iter().take(10) {
                    println!("  FAIL at x = {}: {}", f["x"], check_name(&f["check"]));
                }
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_crossover(args: CrossoverArgs, format: Format) -> anyhow::Result<i32> {
    let kind: BoundKind = args.kind.into();
    let reference = CompositionParams::<f64>::reference(kind);
    let cp = CompositionParams::new(
        args.alpha.unwrap_or(reference.alpha),
        args.lambda.unwrap_or(reference.lambda),
        kind,
    );
    let r = solve_crossover(
        &cp,
        default_comparator(kind, args.hiary),
        &CrossoverOptions::default(),
    )?;
    emit_crossover("crossover", &r, format)
}

fn cmd_optimize(args: OptimizeArgs, format: Format) -> anyhow::Result<i32> {
    let kind: BoundKind = args.kind.into();
    let r = optimize_crossover(
        kind,
        default_comparator(kind, args.hiary),
        &CrossoverOptions::default(),
    )?;
    emit_crossover("optimize", &r, format)
}

fn emit_crossover(
    command: &str,
    r: &zeta_bounds::optimizer::CrossoverResult,
    format: Format,
) -> anyhow::Result<i32> {
    let report = json!({
        "command": command,
        "kind": r.kind, "alpha": r.alpha, "lambda": r.lambda,
        "x10": r.x10, "residual": r.residual,
    });
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Csv => print!(
            "{}",
            csv_table(
                "kind,alpha,lambda,x10,residual",
                [format!(
                    "{},{},{},{},{}",
                    r.kind,
                    csv_num(r.alpha),
                    csv_num(r.lambda),
                    csv_num(r.x10),
                    csv_num(r.residual),
                )],
            )
        ),
        Format::Text => println!(
            "{command} {}: alpha = {}, lambda = {}, threshold 10^{:.4} (residual {:.2e})",
            r.kind, r.alpha, r.lambda, r.x10, r.residual
        ),
    }
    Ok(0)
}

fn cmd_empirical(args: EmpiricalArgs, format: Format) -> anyhow::Result<i32> {
    let path = args
        .zeros
        .or_else(|| std::env::var_os("ZETA_BOUNDS_ZEROS").map(Into::into))
        .context("no zero table: pass --zeros or set ZETA_BOUNDS_ZEROS")?;
    let table = zeta_bounds::empirical::load_zeros(&path)
        .with_context(|| format!("loading {}", path.display()))?;
    let grid = args.grid.values();
    // Rows per grid point are independent; order-preserving merge.
    let rows: Vec<zeta_bounds::empirical::EmpiricalRow> = grid
        .par_iter()
        .map(|&t| {
            zeta_bounds::empirical::empirical_vs_bounds(&table, &[t], args.hiary).map(|r| r.rows)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let all_pass = rows
        .iter()
        .all(|r| r.margin_conditional >= 0.0 && r.margin_unconditional >= 0.0);
    let report = json!({
        "command": "empirical",
        "zeros": path.display().to_string(),
        "count": table.count(),
        "all_pass": all_pass,
        "rows": rows,
    });
    match format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Csv => {
            let lines = rows.iter().map(|r| {
                format!(
                    "{},{},{},{},{},{},{}",
                    csv_num(r.t10),
                    r.quantity,
                    csv_num(r.empirical),
                    csv_num(r.conditional),
                    csv_num(r.unconditional),
                    csv_num(r.margin_conditional),
                    csv_num(r.margin_unconditional),
                )
            });
            print!(
                "{}",
                csv_table(
                    "t10,quantity,empirical,conditional,unconditional,margin_conditional,margin_unconditional",
                    lines,
                )
            );
        }
        Format::Text => {
            println!(
                "empirical: {} rows from {} zeros, {}",
                rows.len(),
                table.count(),
                if all_pass {
                    "all margins positive"
                } else {
                    "NEGATIVE MARGINS PRESENT"
                }
            );
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let n = points.max(2);
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn linear_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let n = points.max(2);
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
