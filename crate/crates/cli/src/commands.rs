//! Implementations of the non-verify subcommands.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use hurwitz_core::algebra::{self, AlgebraElement, WorkedSeries};
use hurwitz_core::oracle::{HurwitzQuery, Oracle};
use hurwitz_core::rational::format_rational;
use hurwitz_core::{decomp, primitive, simple, Partition, Rational, Series, VarFamily};
use serde_json::json;

use crate::{
    AlgebraCommand, ClosedCommand, ExpandArgs, ExtractArgs, ListsArgs, OnePointVariant, OracleArgs,
};

pub fn oracle(args: OracleArgs) -> anyhow::Result<ExitCode> {
    let kappas = args
        .kappas
        .iter()
        .map(|s| Partition::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let query = HurwitzQuery::new(args.n, kappas)?;
    let mut oracle = Oracle::new();
    let h = oracle.hurwitz_number(&query);
    if args.json {
        let doc = json!({
            "n": query.n(),
            "kappas": query.kappas().iter().map(|k| k.parts().to_vec()).collect::<Vec<_>>(),
            "extra_transpositions": query.extra_transpositions(),
            "count_all": oracle.count_all_factorizations(&query).to_string(),
            "count_transitive": oracle.count_transitive_factorizations(&query).to_string(),
            "h": format_rational(&h),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{}", format_rational(&h));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_value(json_mode: bool, h: &Rational, extra: serde_json::Value) -> anyhow::Result<()> {
    if json_mode {
        let mut doc = extra;
        doc.as_object_mut()
            .expect("extra is an object")
            .insert("h".into(), json!(format_rational(h)));
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{}", format_rational(h));
    }
    Ok(())
}

pub fn closed(cmd: ClosedCommand) -> anyhow::Result<ExitCode> {
    match cmd {
        ClosedCommand::Hurwitz { n, kappa, json } => {
            let kappa = Partition::parse(&kappa)?;
            let h = primitive::hurwitz_closed(&kappa, n)?;
            print_value(
                json,
                &h,
                json!({"formula": "hurwitz", "n": n, "kappa": kappa.parts().to_vec()}),
            )?;
        }
        ClosedCommand::Profile { parts, n, json } => {
            let partition = Partition::parse(&parts)?;
            let profile = simple::SmallProfile::from_parts(partition.parts())
                .ok_or_else(|| anyhow!("no closed formula for profile ({parts})"))?;
            let h = simple::small_profile_value(profile, n)?;
            print_value(
                json,
                &h,
                json!({"formula": "profile", "parts": profile.parts(), "n": n}),
            )?;
        }
        ClosedCommand::OnePoint {
            variant,
            n,
            k,
            i,
            json,
        } => {
            let formula = match variant {
                OnePointVariant::MaxCycle => simple::OnePointFormula::MaxCycle {
                    k: k.context("--k is required for max-cycle")?,
                },
                OnePointVariant::NextMaxCycle => simple::OnePointFormula::NextMaxCycle {
                    k: k.context("--k is required for next-max-cycle")?,
                },
                OnePointVariant::SingleCycle => simple::OnePointFormula::SingleCycle {
                    i: i.context("--i is required for single-cycle")?,
                },
                OnePointVariant::AllSimple => simple::OnePointFormula::AllSimple,
            };
            let h = simple::one_point_value(formula, n)?;
            print_value(json, &h, json!({"formula": "one-point", "n": n}))?;
        }
        ClosedCommand::Pm { monomial, n, json } => {
            let (family, pairs) = hurwitz_core::Monomial::parse_vars(&monomial)?;
            if family == Some(VarFamily::X) {
                bail!("P_M monomials use y-variables");
            }
            let entry = simple::pm_entry(&pairs)?;
            let poly = entry.poly(n);
            if json {
                let doc = json!({
                    "label": entry.label,
                    "n": n,
                    "poly": format_rational(&poly),
                    "coefficient": format_rational(&entry.predicted_coefficient(n)),
                });
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                println!("{}", format_rational(&poly));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Text rendering of a series grouped by t-order, one line per order.
fn render_by_order(series: &Series) -> String {
    let mut lines = Vec::new();
    let letter = series.family().letter();
    for n in 0..=series.order() {
        let terms: Vec<String> = series
            .terms()
            .filter(|(m, _)| m.t_deg() == n)
            .map(|(m, c)| {
                if m.is_pure_t() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), m.vars_string(letter))
                }
            })
            .collect();
        if !terms.is_empty() {
            lines.push(format!("t^{n}: {}", terms.join(" + ")));
        }
    }
    lines.join("\n")
}

pub fn expand(family: VarFamily, args: ExpandArgs) -> anyhow::Result<ExitCode> {
    if args.order < 1 {
        bail!("--order must be at least 1");
    }
    let dir = crate::cache::resolve_dir(args.cache);
    let series = crate::cache::get_or_compute(&dir, family, args.order, || match family {
        VarFamily::X => primitive::solve_f_pde(args.order),
        VarFamily::Y => simple::solve_g_pde(args.order),
        VarFamily::T => unreachable!("expand is for F and G"),
    })?;
    if let Some(path) = &args.out {
        std::fs::write(path, series.to_json())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if args.json {
        println!("{}", series.to_json());
    } else {
        println!("{}", render_by_order(&series));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn extract(args: ExtractArgs) -> anyhow::Result<ExitCode> {
    match (&args.monomial, args.table) {
        (Some(spec), false) => match args.series.as_str() {
            "g" => {
                let y = simple::SimpleMonomial::parse(spec)?;
                let order = args.order.unwrap_or(y.sheets()).max(y.sheets());
                let g = simple::solve_g_pde(order);
                let h = simple::extract_h(&g, &y)?;
                print_value(
                    args.json,
                    &h,
                    json!({"series": "g", "monomial": spec, "n": y.sheets()}),
                )?;
            }
            "f" => {
                let x = primitive::PrimitiveMonomial::parse(spec)?;
                let order = args.order.unwrap_or(x.sheets()).max(x.sheets());
                let f = primitive::build_f_closed(order);
                let h = primitive::extract_h(&f, &x)?;
                print_value(
                    args.json,
                    &h,
                    json!({"series": "f", "monomial": spec, "n": x.sheets()}),
                )?;
            }
            _ => unreachable!("clap validates the series name"),
        },
        (None, true) => {
            let order = args.order.context("--order is required with --table")?;
            let mut rows: Vec<(String, Rational)> = Vec::new();
            match args.series.as_str() {
                "g" => {
                    let g = simple::solve_g_pde(order);
                    for n in 1..=order {
                        for y in simple::monomials_at(n) {
                            let h = simple::extract_h(&g, &y)?;
                            rows.push((y.to_string(), h));
                        }
                    }
                }
                "f" => {
                    let f = primitive::build_f_closed(order);
                    let monomials: Vec<_> = f
                        .terms()
                        .map(|(m, _)| primitive::PrimitiveMonomial::new(m.clone()))
                        .collect::<Result<_, _>>()?;
                    for x in monomials {
                        let h = primitive::extract_h(&f, &x)?;
                        rows.push((x.to_string(), h));
                    }
                }
                _ => unreachable!("clap validates the series name"),
            }
            if args.json {
                let doc: Vec<_> = rows
                    .iter()
                    .map(|(m, h)| json!({"monomial": m, "h": format_rational(h)}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                for (m, h) in rows {
                    println!("{m}\t{}", format_rational(&h));
                }
            }
        }
        _ => bail!("pass exactly one of --monomial or --table"),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn lists(args: ListsArgs) -> anyhow::Result<ExitCode> {
    if args.i < 1 || args.j < 1 {
        bail!("--i and --j must be at least 1");
    }
    let lists = decomp::enumerate(args.i, args.j);
    if args.json {
        let doc: Vec<_> = lists
            .iter()
            .map(|l| {
                json!({
                    "a": l.a().to_vec(),
                    "q": l.q().to_string(),
                    "p": l.p().to_string(),
                    "m": l.m().to_string(),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("{:<20} {:>8} {:>8} {:>8}", "a", "q", "p", "m");
        for l in &lists {
            let a = format!(
                "({})",
                l.a()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            println!("{:<20} {:>8} {:>8} {:>8}", a, l.q(), l.p(), l.m());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn target_series(label: &str, order: u32) -> anyhow::Result<Series> {
    Ok(match label {
        "y" => algebra::series_y(order),
        "z" => algebra::series_z(order),
        "z2" => {
            let z = algebra::series_z(order);
            z.mul(&z)?
        }
        other => WorkedSeries::from_label(other)?.coefficient_series(order),
    })
}

fn format_poly_in_n(coeffs: &std::collections::BTreeMap<i64, Rational>) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (&e, c)) in coeffs.iter().enumerate() {
        if idx == 0 {
            if hurwitz_core::rational::is_negative(c) {
                out.push('-');
            }
        } else if hurwitz_core::rational::is_negative(c) {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = format_rational(&hurwitz_core::rational::abs(c));
        match e {
            0 => out.push_str(&magnitude),
            1 => out.push_str(&format!("{magnitude}*n")),
            _ => out.push_str(&format!("{magnitude}*n^{e}")),
        }
    }
    out
}

pub fn algebra(cmd: AlgebraCommand) -> anyhow::Result<ExitCode> {
    match cmd {
        AlgebraCommand::Express {
            target,
            max_deg,
            order,
            json,
        } => {
            let series = target_series(&target, order)?;
            let found: Option<(AlgebraElement, u32)> = match max_deg {
                Some(d) => algebra::express_in_x(&series, d)?.map(|e| (e, d)),
                None => algebra::express_in_x_auto(&series)?,
            };
            match found {
                Some((element, degree)) => {
                    if json {
                        println!("{}", element.to_json());
                    } else {
                        println!("{element}");
                        println!("degree: {degree}");
                    }
                }
                None => {
                    println!("NOT_FOUND");
                }
            }
        }
        AlgebraCommand::Alg1Fit {
            target,
            laurent_neg,
            laurent_pos,
            poly_deg,
            order,
            json,
        } => {
            let series = target_series(&target, order)?;
            match algebra::fit_tree_form(&series, laurent_neg, laurent_pos, poly_deg)? {
                Some(form) => {
                    if json {
                        let doc = json!({
                            "constant": format_rational(&form.constant),
                            "laurent": form.laurent.iter()
                                .map(|(e, c)| (e.to_string(), format_rational(c)))
                                .collect::<std::collections::BTreeMap<_, _>>(),
                            "poly": form.poly.iter()
                                .map(|(d, c)| (d.to_string(), format_rational(c)))
                                .collect::<std::collections::BTreeMap<_, _>>(),
                            "underdetermined": form.underdetermined,
                        });
                        println!("{}", serde_json::to_string_pretty(&doc)?);
                    } else {
                        println!("a = {}", format_rational(&form.constant));
                        println!("L(n) = {}", format_poly_in_n(&form.laurent));
                        let poly: std::collections::BTreeMap<i64, Rational> = form
                            .poly
                            .iter()
                            .map(|(&d, c)| (i64::from(d), c.clone()))
                            .collect();
                        println!("P(n) = {}", format_poly_in_n(&poly));
                        if form.underdetermined {
                            println!("underdetermined: free parameters set to zero");
                        }
                    }
                }
                None => println!("NOT_FOUND"),
            }
        }
        AlgebraCommand::Identities { order } => {
            let mut failures = 0;
            let mut check = |name: &str, ok: bool| {
                println!("{} {name}", if ok { "PASS" } else { "FAIL" });
                if !ok {
                    failures += 1;
                }
            };
            check("tree-inverse", algebra::tree_inverse_identity(order));
            check("euler-y", algebra::euler_y_identity(order));
            check("euler-z", algebra::euler_z_identity(order));
            check("z-squared", algebra::z_squared_identity(order));
            check("abel", (2..=30).all(algebra::verify_abel));
            check("a-sequence", (2..=30).all(|n| algebra::a_value(n).is_ok()));
            check(
                "y-powers",
                (1..=6).all(|k| algebra::y_power_formula(k, order.min(25))),
            );
            check("f11-relation", algebra::f11_relation(order.min(20)));
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
