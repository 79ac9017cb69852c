//! Acceptance suite. Every check is exact; runtime limits are wall-clock.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use pte_core::*;
use std::result::Result;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn run_cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pte"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("pte {args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn a(p: u32, i: usize) -> SymbolicForm {
    symbolic_basis(p, i).unwrap()
}

/// Uniform zero-sum integer vector with entries in [-10, 10], by rejection.
fn random_zero_sum(rng: &mut StdRng, p: u32) -> IntVector {
    loop {
        let mut v: Vec<i64> = (0..p - 1).map(|_| rng.gen_range(-10..=10)).collect();
        let last = -v.iter().sum::<i64>();
        if (-10..=10).contains(&last) {
            v.push(last);
            return ZeroSumVector::from_ints(&v).unwrap();
        }
    }
}

fn theorem1_sweep() -> Vec<(PtmParams, Vec<IntVector>)> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut cases = Vec::new();
    for p in 2..=5u32 {
        for n in 1..=4u32 {
            let params = PtmParams::new(p, n).unwrap();
            let vectors = (0..20).map(|_| random_zero_sum(&mut rng, p)).collect();
            cases.push((params, vectors));
        }
    }
    cases
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let v = run_cli(&["partition", "--p", "2", "--m", "3"])?;
    let took = within(start, Duration::from_secs(1))?;
    let r = &v["result"];
    ensure(r["classes"] == json!([[0, 3, 5, 6, 9, 10, 12, 15], [1, 2, 4, 7, 8, 11, 13, 14]]), || {
        format!("classes {}", r["classes"])
    })?;
    ensure(
        r["power_sums"] == json!([["8", "8"], ["60", "60"], ["620", "620"], ["7200", "7200"]]),
        || format!("power sums {}", r["power_sums"]),
    )?;
    ensure(r["esp_verified_through"] == json!(3), || "verdict".into())?;
    Ok(format!("classes and sums 8/60/620/7200 exact, {took:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s = ZeroSumVector::symbolic(3).unwrap();
    let z = SymbolicForm::zero();
    let p1 = vec![a(3, 0), a(3, 0) + a(3, 1)];
    let p2 = vec![a(3, 0), a(3, 0) + a(3, 1), z, a(3, 0) + a(3, 1), a(3, 1)];
    for (n, expected) in [(1u32, p1), (2, p2)] {
        let params = PtmParams::new(3, n).unwrap();
        let expected = SymbolicPolynomial::new(expected);
        let by_division = factor_f(&params, &s).map_err(|e| e.to_string())?;
        let by_recursion = build_p_recursive(&params, &s).map_err(|e| e.to_string())?;
        ensure(by_division == expected, || format!("N={n}: division gave {by_division}"))?;
        ensure(by_recursion == expected, || format!("N={n}: recursion gave {by_recursion}"))?;
        ensure(expected.mul_int(&build_q(&params)) == build_f(&params, &s).unwrap(), || {
            format!("N={n}: P*Q != F")
        })?;
    }
    let v = run_cli(&["factor", "--p", "3", "--n", "2", "--symbolic"])?;
    let cli_p = json!([["1", "0"], ["1", "1"], ["0", "0"], ["1", "1"], ["0", "1"]]);
    ensure(v["result"]["p_division"] == cli_p, || format!("cli P {}", v["result"]["p_division"]))?;
    ensure(v["result"]["rendered"]["p"] == json!("a_0 + (a_0+a_1)x + (a_0+a_1)x^3 + a_1x^4"), || {
        format!("cli rendering {}", v["result"]["rendered"]["p"])
    })?;
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("P_1 = a_0 + (a_0+a_1)x and P_2 reproduced, {took:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for p in 2..=5u32 {
        for m in 0..=4u32 {
            if u64::from(p).pow(m + 1) > 100_000 {
                continue;
            }
            let params = PtmParams::for_degree(p, m, Budget::DEFAULT).unwrap();
            let report = verify_esp(&prouhet_partition(&params), m);
            ensure(report.equal_up_to == Some(m) && report.first_violation.is_none(), || {
                format!("p={p} M={m}: {report:?}")
            })?;
            cases += 1;
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("{cases} (p, M) cases equal through M, {took:?}"))
}

fn check_factorization<C: Coefficient>(params: &PtmParams, vector: &ZeroSumVector<C>) -> Result<(), String> {
    let tag = || format!("p={} N={} A={:?}", params.p(), params.n(), vector.entries());
    let f = build_f(params, vector).map_err(|e| e.to_string())?;
    let f_rec = build_f_by_recurrence(params, vector).map_err(|e| e.to_string())?;
    ensure(f == f_rec, || format!("{}: recurrence differs", tag()))?;
    let pn = factor_f(params, vector).map_err(|e| format!("{}: {e}", tag()))?;
    ensure(pn.mul_int(&build_q(params)) == f, || format!("{}: P*Q != F", tag()))?;
    let p_rec = build_p_recursive(params, vector).map_err(|e| e.to_string())?;
    ensure(pn == p_rec, || format!("{}: recursive P differs", tag()))?;
    Ok(())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (params, vectors) in theorem1_sweep() {
        check_factorization(&params, &ZeroSumVector::symbolic(params.p()).unwrap())?;
        checked += 1;
        for v in &vectors {
            check_factorization(&params, v)?;
            checked += 1;
        }
    }
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} factorizations exact, {took:?}"))
}

fn check_vanishing<C: Coefficient>(params: &PtmParams, vector: &ZeroSumVector<C>) -> Result<(), String> {
    for m in 0..params.n() {
        let s = weighted_power_sum(params, vector, m).map_err(|e| e.to_string())?;
        ensure(s.is_zero(), || format!("p={} N={} m={m}: weighted sum {s}", params.p(), params.n()))?;
    }
    if !vector.is_zero() {
        let f = build_f(params, vector).map_err(|e| e.to_string())?;
        let order = vanishing_order_at_one(&f).map_err(|e| e.to_string())?;
        ensure(order >= params.n(), || format!("p={} N={}: order {order}", params.p(), params.n()))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for (params, vectors) in theorem1_sweep() {
        check_vanishing(&params, &ZeroSumVector::symbolic(params.p()).unwrap())?;
        check_vanishing(&params, &ZeroSumVector::roots_of_unity(params.p()).unwrap())?;
        checked += 2;
        for v in &vectors {
            check_vanishing(&params, v)?;
            checked += 1;
        }
    }
    let took = start.elapsed();
    Ok(format!("{checked} vectors over Z, Z[ω] and symbolic forms, {took:?}"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut coefficients = 0;
    for p in 2..=6u32 {
        for m in 0..=3u32 {
            let report = product_identity_report(p, m, Budget::DEFAULT).map_err(|e| e.to_string())?;
            ensure(report.holds, || format!("p={p} M={m}: {:?}", report.mismatches.first()))?;
            ensure(report.coefficients == (p as usize).pow(m + 1), || {
                format!("p={p} M={m}: {} coefficients", report.coefficients)
            })?;
            coefficients += report.coefficients;
        }
    }
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!("20 identities, {coefficients} cyclotomic coefficients, {took:?}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut checked = 0;
    for p in 2..=5u32 {
        for m in 0..=3u32 {
            for _ in 0..10 {
                let mu: Vec<i64> = (0..=m).map(|_| rng.gen_range(1..=20)).collect();
                let spec = LehmerSpec::new(p, mu.clone(), Budget::DEFAULT).map_err(|e| e.to_string())?;
                let report = lehmer_verify(&spec);
                ensure(report.esp.equal_up_to == Some(m), || format!("p={p} mu={mu:?}: {:?}", report.esp))?;
                ensure(report.classes.total_multiplicity() == u64::from(p).pow(m + 1), || {
                    format!("p={p} mu={mu:?}: multiplicity")
                })?;
                for deg in 0..=m {
                    ensure(lehmer_weighted_sum(&spec, deg).is_zero(), || {
                        format!("p={p} mu={mu:?}: weighted sum at m={deg}")
                    })?;
                }
                checked += 1;
            }
            let spec = LehmerSpec::prouhet(p, m, Budget::DEFAULT).unwrap();
            let classes = lehmer_expand(&spec);
            let part = prouhet_partition(&PtmParams::for_degree(p, m, Budget::DEFAULT).unwrap());
            for k in 0..p as usize {
                let expected: Vec<BigInt> = part.class(k).iter().map(|&n| BigInt::from(n)).collect();
                ensure(classes.expanded(k) == expected, || format!("p={p} M={m}: class {k} differs"))?;
            }
        }
    }
    let took = start.elapsed();
    Ok(format!("{checked} random weight vectors equal through M; p^m weights match partitions, {took:?}"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in 2..=5u32 {
        for m in 0..=4u32 {
            if u64::from(p).pow(m + 1) > 100_000 {
                continue;
            }
            let params = PtmParams::for_degree(p, m, Budget::DEFAULT).unwrap();
            let top = m + 1;
            let direct = power_sum_table(&prouhet_partition(&params), top);
            let lehmer = lehmer_expand(&LehmerSpec::prouhet(p, m, Budget::DEFAULT).unwrap()).power_sum_table(top);
            ensure(direct == lehmer, || format!("p={p} M={m}: Lehmer table differs"))?;
            for deg in 0..=top {
                for j in 0..p as usize {
                    for k in 0..p as usize {
                        if j == k {
                            continue;
                        }
                        let v = ZeroSumVector::indicator(p, j, k).unwrap();
                        let weighted = weighted_power_sum(&params, &v, deg).unwrap();
                        let diff = direct.get(deg as usize, j) - direct.get(deg as usize, k);
                        ensure(weighted == diff, || format!("p={p} M={m} m={deg} j={j} k={k}"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    let took = start.elapsed();
    Ok(format!("{checked} indicator sums match direct and Lehmer tables, {took:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 golden partition p=2 M=3 via CLI", criterion_1),
        ("2 golden symbolic factorizations p=3 N=1,2", criterion_2),
        ("3 equal power sums sweep p<=5 M<=4", criterion_3),
        ("4 factorization property suite", criterion_4),
        ("5 vanishing weighted sums and root order", criterion_5),
        ("6 root-of-unity product identity p<=6 M<=3", criterion_6),
        ("7 Lehmer weights sweep", criterion_7),
        ("8 three-way power-sum cross-check", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
