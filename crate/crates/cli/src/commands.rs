use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};

use pte_core::{
    build_c_indices, lehmer_verify, lehmer_weighted_sum, power_sum_table, product_identity_report,
    prouhet_partition, ptm_block, vanishing_order_at_one, weighted_power_sum, Budget, Coefficient,
    CyclotomicElement, Factorization, LehmerSpec, PtmParams, Result, Zero, ZeroSumVector,
};

use crate::output::CommandOutput;

fn elapsed(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn ptm(p: u32, n: u32, budget: Budget) -> Result<CommandOutput> {
    let start = Instant::now();
    let params = PtmParams::with_budget(p, n, budget)?;
    let block = ptm_block(&params);
    let mut csv = String::from("n,v\n");
    for (i, v) in block.iter().enumerate() {
        let _ = writeln!(csv, "{i},{v}");
    }
    Ok(CommandOutput {
        command: "ptm",
        params: json!({"p": p, "n": n}),
        result: json!({"p": p, "n": n, "sequence": block}),
        elapsed_ms: elapsed(start),
        plain: format!("{}\n", join(&block, ",")),
        csv,
        passed: true,
        diagnostics: None,
    })
}

pub fn partition(p: u32, m: u32, check_beyond: Option<u32>, budget: Budget) -> Result<CommandOutput> {
    let start = Instant::now();
    let params = PtmParams::for_degree(p, m, budget)?;
    let part = prouhet_partition(&params);
    let through = check_beyond.map_or(m, |c| c.max(m));
    let table = power_sum_table(&part, through);
    let report = table.esp_report(through);
    let passed = report.holds_through(m);

    let rows: Vec<Vec<String>> = table
        .rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let mut result = json!({
        "p": p,
        "m": m,
        "classes": part.classes(),
        "power_sums": rows,
        "esp_verified_through": report.equal_up_to,
    });
    if check_beyond.is_some() {
        result["checked_through"] = json!(report.checked_through);
        result["first_violation"] = json!(report.first_violation);
    }

    let mut plain = String::new();
    for (k, class) in part.classes().iter().enumerate() {
        let _ = writeln!(plain, "S_{k} = {{{}}}", join(class, ","));
    }
    for (deg, row) in rows.iter().enumerate() {
        let _ = writeln!(plain, "m={deg}: {}", row.join("/"));
    }
    match (report.equal_up_to, report.first_violation) {
        (Some(e), None) => {
            let _ = writeln!(plain, "equal sums of like powers through degree {e}");
        }
        (e, Some(v)) => {
            let upto = e.map_or("none".to_string(), |e| e.to_string());
            let _ = writeln!(
                plain,
                "equal sums of like powers through degree {upto}; s_{}({m}) != s_{}({m})",
                v.j,
                v.k,
                m = v.m
            );
        }
        (None, None) => {}
    }

    let mut csv = format!("m,{}\n", join((0..p).map(|k| format!("s_{k}")), ","));
    for (deg, row) in rows.iter().enumerate() {
        let _ = writeln!(csv, "{deg},{}", row.join(","));
    }

    Ok(CommandOutput {
        command: "partition",
        params: json!({"p": p, "m": m, "check_beyond": check_beyond}),
        result,
        elapsed_ms: elapsed(start),
        csv,
        plain,
        passed,
        diagnostics: (!passed).then(|| format!("equal sums fail below degree {m}: {report:?}")),
    })
}

fn factor_payload<C: Coefficient>(
    params: &PtmParams,
    a: &ZeroSumVector<C>,
    width: usize,
) -> Result<(Value, String, String, bool)> {
    let fac = Factorization::compute(params, a)?;
    let n = params.n();
    let vanishing: Vec<bool> = (0..n)
        .map(|m| weighted_power_sum(params, a, m).map(|s| s.is_zero()))
        .collect::<Result<_>>()?;
    let order = if fac.f.is_zero() { None } else { Some(vanishing_order_at_one(&fac.f)?) };
    let sums_vanish = vanishing.iter().all(|&v| v);
    let order_ok = order.is_none_or(|o| o >= n);
    let passed = fac.verified() && sums_vanish && order_ok;

    let a_repr: Vec<_> = a.entries().iter().map(|e| e.repr(width)).collect();
    let result = json!({
        "p": params.p(),
        "n": n,
        "a": a_repr,
        "f": fac.f.repr(width),
        "q": fac.q.repr(1),
        "p_division": fac.p_division.repr(width),
        "p_recursive": fac.p_recursive.repr(width),
        "c_indices": build_c_indices(params),
        "rendered": {
            "f": fac.f.to_string(),
            "q": fac.q.to_string(),
            "p": fac.p_division.to_string(),
        },
        "checks": {
            "f_recurrence_equals_direct": fac.f_recurrence_agrees,
            "p_times_q_equals_f": fac.product_matches,
            "p_recursive_equals_p_division": fac.p_division == fac.p_recursive,
            "weighted_sums_vanish_below_n": sums_vanish,
            "vanishing_order_at_one": order,
        },
        "verified": passed,
    });

    let yes = |b: bool| if b { "yes" } else { "NO" };
    let mut plain = String::new();
    let _ = writeln!(plain, "F = {}", fac.f);
    let _ = writeln!(plain, "Q = {}", fac.q);
    let _ = writeln!(plain, "P = {}", fac.p_division);
    let _ = writeln!(plain, "F = P*Q: {}", yes(fac.product_matches));
    let _ = writeln!(plain, "P recursive = P division: {}", yes(fac.p_division == fac.p_recursive));
    let _ = writeln!(plain, "F recurrence = F direct: {}", yes(fac.f_recurrence_agrees));
    let _ = writeln!(plain, "weighted sums vanish for m < {n}: {}", yes(sums_vanish));
    if let Some(o) = order {
        let _ = writeln!(plain, "vanishing order at x=1: {o}");
    }

    let mut csv = String::from("degree,f,q,p\n");
    let len = [fac.f.coeffs().len(), fac.q.coeffs().len(), fac.p_division.coeffs().len()]
        .into_iter()
        .max()
        .unwrap_or(0);
    for i in 0..len {
        let _ = writeln!(csv, "{i},{},{},{}", fac.f.coeff(i), fac.q.coeff(i), fac.p_division.coeff(i));
    }
    Ok((result, plain, csv, passed))
}

pub fn factor(p: u32, n: u32, coeffs: Option<Vec<i64>>, symbolic: bool, budget: Budget) -> Result<CommandOutput> {
    let start = Instant::now();
    let params = PtmParams::with_budget(p, n, budget)?;
    let width = p as usize - 1;
    let (result, plain, csv, passed, mode) = match coeffs {
        Some(c) if !symbolic => {
            if c.len() != p as usize {
                return Err(pte_core::Error::LengthMismatch { expected: p as usize, found: c.len() });
            }
            let a = ZeroSumVector::new(c.iter().map(|&v| BigInt::from(v)).collect())?;
            let (r, pl, cs, ok) = factor_payload(&params, &a, width)?;
            (r, pl, cs, ok, "integer")
        }
        _ => {
            let a = ZeroSumVector::symbolic(p)?;
            let (r, pl, cs, ok) = factor_payload(&params, &a, width)?;
            (r, pl, cs, ok, "symbolic")
        }
    };
    let mut result = result;
    result["mode"] = json!(mode);
    Ok(CommandOutput {
        command: "factor",
        params: json!({"p": p, "n": n, "mode": mode}),
        result,
        elapsed_ms: elapsed(start),
        csv,
        plain,
        passed,
        diagnostics: (!passed).then(|| "factorization checks failed; see result.checks".to_string()),
    })
}

pub fn lehmer(p: u32, mu: Vec<i64>, budget: Budget) -> Result<CommandOutput> {
    let start = Instant::now();
    let spec = LehmerSpec::new(p, mu.clone(), budget)?;
    let m = spec.degree();
    let report = lehmer_verify(&spec);
    let passed = report.esp.holds_through(m);

    let mut plain = String::new();
    for k in 0..p as usize {
        let _ = writeln!(plain, "S_{k} = {{{}}}", join(report.classes.expanded(k), ","));
    }
    for (deg, row) in report.power_sums.rows().iter().enumerate() {
        let _ = writeln!(plain, "m={deg}: {}", join(row, "/"));
    }
    let verdict = match report.esp.equal_up_to {
        Some(e) => format!("equal sums of like powers through degree {e}"),
        None => "class sizes differ".to_string(),
    };
    let _ = writeln!(plain, "{verdict}");

    let mut csv = String::from("class,value,multiplicity\n");
    for (k, class) in report.classes.classes().iter().enumerate() {
        for (v, mult) in class {
            let _ = writeln!(csv, "{k},{v},{mult}");
        }
    }

    Ok(CommandOutput {
        command: "lehmer",
        params: json!({"p": p, "mu": mu}),
        result: json!({
            "p": p,
            "mu": spec.mu(),
            "m": m,
            "classes": report.classes,
            "power_sums": report.power_sums,
            "esp_verified_through": report.esp.equal_up_to,
            "first_violation": report.esp.first_violation,
        }),
        elapsed_ms: elapsed(start),
        csv,
        plain,
        passed,
        diagnostics: (!passed).then(|| format!("power sums differ: {:?}", report.esp)),
    })
}

pub fn identities(p: u32, m: u32, budget: Budget) -> Result<CommandOutput> {
    let start = Instant::now();
    let params = PtmParams::for_degree(p, m, budget)?;
    let product = product_identity_report(p, m, budget)?;
    let omega = ZeroSumVector::roots_of_unity(p)?;
    let spec = LehmerSpec::prouhet(p, m, budget)?;
    let width = p as usize - 1;

    let mut sums = Vec::new();
    let mut sums_ok = true;
    for deg in 0..=m {
        let series: CyclotomicElement = weighted_power_sum(&params, &omega, deg)?;
        let tuples = lehmer_weighted_sum(&spec, deg);
        let ok = series.is_zero() && tuples.is_zero();
        sums_ok &= ok;
        sums.push(json!({
            "m": deg,
            "series_sum": series.repr(width),
            "tuple_sum": tuples.repr(width),
            "vanishes": ok,
        }));
    }
    let passed = product.holds && sums_ok;

    let mut diag = String::new();
    for d in &product.mismatches {
        let _ = writeln!(diag, "x^{}: product [{}] != series [{}]", d.exponent, d.product.join(","), d.series.join(","));
    }
    for s in &sums {
        if s["vanishes"] == json!(false) {
            let _ = writeln!(diag, "weighted sum at m={} does not vanish: {}", s["m"], s);
        }
    }

    let verdict = |b: bool| if b { "pass" } else { "FAIL" };
    let mut plain = String::new();
    let _ = writeln!(
        plain,
        "product identity (p={p}, M={m}, {} coefficients): {}",
        product.coefficients,
        verdict(product.holds)
    );
    let _ = writeln!(plain, "weighted sums vanish for m=0..{m}: {}", verdict(sums_ok));
    let mut csv = String::from("check,m,passed\n");
    let _ = writeln!(csv, "product_identity,{m},{}", product.holds);
    for s in &sums {
        let _ = writeln!(csv, "weighted_sum,{},{}", s["m"], s["vanishes"]);
    }

    Ok(CommandOutput {
        command: "identities",
        params: json!({"p": p, "m": m}),
        result: json!({
            "p": p,
            "m": m,
            "product_identity": product,
            "weighted_sums": sums,
            "passed": passed,
        }),
        elapsed_ms: elapsed(start),
        csv,
        plain,
        passed,
        diagnostics: (!passed).then_some(diag),
    })
}
