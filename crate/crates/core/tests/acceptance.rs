//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines show up in plain `cargo test` output.

mod common;

use std::cell::RefCell;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use cwbounds::certificate::CertificateBundle;
use cwbounds::cli;
use cwbounds::combinatorics::{binomial, krawtchouk, krawtchouk_minus, krawtchouk_plus};
use cwbounds::constraints::{
    binary_constraints, binary_size_equality, column_constraints, CodeParams, ColumnSides, PeerBoundSet, Provenance,
};
use cwbounds::engine::{max_form_optimum, BoundResult, DescentMode, Engine, EngineConfig, Method};
use cwbounds::oracle::{
    exhaustive_max, greedy_lower_bound, lp_point, verify_column_identities, verify_lemmas, CodeKind,
};
use cwbounds::rational::{floor_plus_one, frac, int, Rational};
use cwbounds::tbound::TBoundTable;
use cwbounds::constraints::Family;

use common::{all_rows, canonical_params, pair_families_engine, column_config, IMPROVED_ROWS};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.2?}, budget {budget:?}"))?;
    Ok(t)
}

/// Results collected by criteria 1-5 for the certificate round trip.
#[derive(Default)]
struct Collected {
    results: Vec<BoundResult>,
}

fn bound_27_8_13(c: &mut Collected) -> Outcome {
    let start = Instant::now();
    let r = pair_families_engine().bound(27, 8, 13).map_err(|e| e.to_string())?;
    let t = within(Duration::from_secs(10), start)?;
    ensure(r.bound == 11897, || format!("A(27,8,13) <= {} (expected 11897)", r.bound))?;
    let opt = r.derivation.lp_nodes[0].solution.optimum.clone().unwrap();
    let msg = format!("A(27,8,13) <= 11897, LP optimum {opt}, {t:.2?}");
    c.results.push(r);
    Ok(msg)
}

fn rows_27_8_13() -> Outcome {
    let p = CodeParams::new(27, 8, 13).unwrap();
    let engine = pair_families_engine();
    let (rows, _) = engine.base_constraints(&p).map_err(|e| e.to_string())?;
    let target = |coeffs: &[(u32, i64)], rhs: i64| {
        rows.iter().any(|r| {
            r.sense == cwbounds::constraints::Sense::Le
                && r.coefficients.len() == coeffs.len()
                && coeffs.iter().all(|&(i, _)| r.coefficients.contains_key(&i))
                && {
                    // proportional with a positive factor
                    let scale = &r.rhs / int(rhs);
                    scale > int(0) && coeffs.iter().all(|&(i, c)| r.coefficient(i) == int(c) * &scale)
                }
        })
    };
    ensure(target(&[(12, 1), (13, 1)], 1), || "A24 + A26 <= 1 not emitted".into())?;
    ensure(target(&[(11, 1), (12, 6), (13, 26)], 26), || "A22 + 6A24 + 26A26 <= 26 not emitted".into())?;
    Ok("emits A24 + A26 <= 1 and A22 + 6A24 + 26A26 <= 26".into())
}

fn column_rows_27_12_12() -> Outcome {
    let p = CodeParams::new(27, 12, 12).unwrap();
    let rows = column_constraints(&p, 140, &[1, 2, 3], ColumnSides::Minus).map_err(|e| e.to_string())?;
    let expected: [(u32, [i64; 7], Rational); 3] = [
        (1, [12, 14, 16, 18, 20, 22, 24], frac(9333, 5)),
        (2, [180, 182, 176, 162, 140, 110, 72], frac(859356, 35)),
        (3, [1480, 1456, 1440, 1464, 1560, 1760, 2096], frac(204715, 1)),
    ];
    for (k, coeffs, rhs) in expected {
        let row = rows
            .iter()
            .find(|r| r.provenance == Provenance::ColumnsMinus { k, m: 140 })
            .ok_or_else(|| format!("no minus-side row for k = {k}"))?;
        for (idx, c) in coeffs.iter().enumerate() {
            let i = 6 + idx as u32;
            ensure(row.coefficient(i) == int(*c), || format!("k = {k}: coefficient of A{} is {}", 2 * i, row.coefficient(i)))?;
        }
        ensure(row.rhs == rhs, || format!("k = {k}: rhs {} (expected {rhs})", row.rhs))?;
    }
    Ok("k = 1,2,3 coefficients and right-hand sides 9333/5, 859356/35, 204715".into())
}

fn descent_27_12_12(c: &mut Collected) -> Outcome {
    let start = Instant::now();
    let p = CodeParams::new(27, 12, 12).unwrap();
    let mut cfg = column_config();
    cfg.column_sides = ColumnSides::Minus;
    cfg.descent_mode = DescentMode::MaxForm;
    let max_engine = Engine::new(TBoundTable::seed(), cfg.clone());
    let (opt, _) = max_form_optimum(&max_engine, &p, 140).map_err(|e| e.to_string())?;
    let opt = opt.ok_or("max-form LP has no optimum")?;
    ensure(opt == frac(5604427, 40320), || format!("max-form optimum {opt}"))?;
    ensure(floor_plus_one(&opt) == Some(139), || "floor + 1 is not 139".into())?;

    cfg.known_bound = Some(140);
    let max_result = Engine::new(TBoundTable::seed(), cfg).bound(27, 12, 12).map_err(|e| e.to_string())?;
    ensure(max_result.bound == 139, || format!("max-form descent gives {}", max_result.bound))?;

    let mut cfg = column_config();
    cfg.known_bound = Some(140);
    let r = Engine::new(TBoundTable::seed(), cfg).bound(27, 12, 12).map_err(|e| e.to_string())?;
    ensure(r.bound == 139 && r.method == Method::Descent, || format!("infeasibility descent gives {}", r.bound))?;
    let t = within(Duration::from_secs(10), start)?;
    c.results.push(max_result);
    c.results.push(r);
    Ok(format!("max-form optimum 5604427/40320 -> 139; infeasibility descent 140 -> 139; {t:.2?}"))
}

fn improved_rows(c: &mut Collected) -> Outcome {
    let engine = Engine::new(TBoundTable::seed(), EngineConfig::with_families(Family::ALL));
    let mut reproduced = Vec::new();
    let mut skipped = Vec::new();
    for (n, d, w, improved, previous) in IMPROVED_ROWS {
        let r = engine.bound_with_known(n, d, w, Some(previous)).map_err(|e| e.to_string())?;
        ensure(r.bound <= previous, || format!("A({n},{d},{w}) <= {} exceeds {previous}", r.bound))?;
        ensure(r.bound >= improved, || format!("A({n},{d},{w}) <= {} is below the published {improved}", r.bound))?;
        if r.bound == improved {
            reproduced.push(format!("({n},{d},{w})"));
        } else {
            skipped.push(format!("({n},{d},{w})"));
        }
        c.results.push(r);
    }
    let plain = pair_families_engine().bound(27, 8, 13).map_err(|e| e.to_string())?;
    ensure(plain.bound == 11897, || "A(27,8,13) is not 11897".into())?;
    let mut cfg = column_config();
    cfg.known_bound = Some(140);
    let two = Engine::new(TBoundTable::seed(), cfg).bound(27, 12, 12).map_err(|e| e.to_string())?;
    ensure(two.bound == 139, || "A(27,12,12) is not 139".into())?;
    Ok(format!(
        "{} reproduced, {} skipped (need T data outside the shipped table: {})",
        reproduced.len(),
        skipped.len(),
        skipped.join(" ")
    ))
}

fn sandwich() -> Outcome {
    let start = Instant::now();
    let default = Engine::new(TBoundTable::seed(), EngineConfig::default());
    let full = Engine::new(TBoundTable::seed(), EngineConfig::with_families(Family::ALL));
    let mut equal = 0;
    let cases = canonical_params(9);
    for p in &cases {
        let truth = exhaustive_max(p.n, p.d, CodeKind::ConstantWeight { w: p.w }).map_err(|e| e.to_string())?.len() as u64;
        for engine in [&default, &full] {
            let b = engine.bound(p.n, p.d, p.w).map_err(|e| e.to_string())?.bound;
            ensure(b >= truth, || format!("A{p}: engine {b} below exhaustive {truth}"))?;
            if b == truth {
                equal += 1;
            }
        }
    }
    let spot = |n, d, kind| exhaustive_max(n, d, kind).map(|c| c.len() as u64).map_err(|e| e.to_string());
    ensure(spot(6, 4, CodeKind::ConstantWeight { w: 3 })? == 4, || "A(6,4,3) != 4".into())?;
    ensure(spot(4, 4, CodeKind::ConstantWeight { w: 2 })? == 2, || "A(4,4,2) != 2".into())?;
    ensure(spot(4, 2, CodeKind::Binary)? == 8, || "A(4,2) != 8".into())?;
    ensure(spot(5, 3, CodeKind::Binary)? == 4, || "A(5,3) != 4".into())?;
    ensure(default.bound(6, 4, 3).unwrap().bound == 4, || "engine A(6,4,3) != 4".into())?;
    ensure(default.bound(4, 4, 2).unwrap().bound == 2, || "engine A(4,4,2) != 2".into())?;
    ensure(default.binary_bound(4, 2).unwrap().bound >= 8, || "binary A(4,2) bound below 8".into())?;
    ensure(default.binary_bound(5, 3).unwrap().bound >= 4, || "binary A(5,3) bound below 4".into())?;
    for n in 2..=6 {
        for d in 1..=n {
            let truth = spot(n, d, CodeKind::Binary)?;
            let b = full.binary_bound(n, d).map_err(|e| e.to_string())?.bound;
            ensure(b >= truth, || format!("A({n},{d}): engine {b} below exhaustive {truth}"))?;
        }
    }
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("{} canonical cases, tight in {equal} of {} runs; spot values hold; {t:.2?}", cases.len(), 2 * cases.len()))
}

fn validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rows_checked = 0u64;
    let mut lemma_checks = 0u64;
    for idx in 0..1000u64 {
        if idx % 5 == 4 {
            let n = rng.gen_range(3..=12);
            let d = rng.gen_range(1..=n);
            let code = greedy_lower_bound(n, d, CodeKind::Binary, idx).map_err(|e| e.to_string())?;
            let m = code.len() as u64;
            let point = lp_point(&code).map_err(|e| e.to_string())?;
            let mut rows = binary_constraints(n, d, Some(m)).map_err(|e| e.to_string())?;
            rows.push(binary_size_equality(n, d, m));
            for r in &rows {
                ensure(r.is_satisfied(&point), || format!("binary ({n},{d}) code of size {m} violates {}", r.provenance))?;
            }
            rows_checked += rows.len() as u64;
        } else {
            let n = rng.gen_range(6..=16);
            let w = rng.gen_range(3..=n / 2);
            let d = 2 * rng.gen_range(2..w);
            let p = CodeParams::new(n, d, w).map_err(|e| e.to_string())?;
            let code = greedy_lower_bound(n, d, CodeKind::ConstantWeight { w }, idx).map_err(|e| e.to_string())?;
            let m = code.len() as u64;
            let point = lp_point(&code).map_err(|e| e.to_string())?;
            let rows = all_rows(&p, m);
            for r in &rows {
                ensure(r.is_satisfied(&point), || format!("{p} code of size {m} violates {}", r.provenance))?;
            }
            rows_checked += rows.len() as u64;
            let (peers, _) = PeerBoundSet::from_table(&p, &TBoundTable::seed());
            let report = verify_lemmas(&code, &p, &peers).map_err(|e| e.to_string())?;
            ensure(report.is_clean(), || format!("{p}: {:?}", report.violations))?;
            lemma_checks += report.checks;
        }
    }
    Ok(format!("1000 greedy codes, {rows_checked} constraint evaluations, {lemma_checks} per-codeword checks, zero violations"))
}

/// Coefficients of `(1 - z)^x (1 + z)^(n - x)`.
fn generating_coefficients(n: i64, x: i64) -> Vec<BigInt> {
    let mut poly = vec![BigInt::from(1)];
    for step in 0..n {
        let sign = if step < x { -1 } else { 1 };
        let mut next = vec![BigInt::from(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * sign;
        }
        poly = next;
    }
    poly
}

fn identities() -> Outcome {
    let mut checked = 0u64;
    for n in 0..=28i64 {
        for x in 0..=n {
            let gf = generating_coefficients(n, x);
            for k in 0..=n {
                let (plus, minus) = (krawtchouk_plus(k, n, x), krawtchouk_minus(k, n, x));
                ensure(&plus + &minus == binomial(n, k), || format!("P+ + P- != C({n},{k}) at x = {x}"))?;
                ensure(&plus - &minus == krawtchouk(k, n, x), || format!("P+ - P- != P_{k}({n};{x})"))?;
                ensure(krawtchouk(k, n, x) == gf[k as usize], || format!("P_{k}({n};{x}) disagrees with the generating function"))?;
                checked += 1;
            }
        }
    }
    let mut codes = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    while codes < 50 {
        let n = rng.gen_range(5..=14);
        let w = rng.gen_range(2..=n / 2);
        let d = 2 * rng.gen_range(1..=w);
        let code = greedy_lower_bound(n, d, CodeKind::ConstantWeight { w }, codes).map_err(|e| e.to_string())?;
        for k in 1..=n {
            let report = verify_column_identities(&code, k).map_err(|e| e.to_string())?;
            let (lhs, rhs) = report.one_row.clone().ok_or("constant-weight code without one-row data")?;
            ensure(lhs == rhs, || format!("one-row identity fails for n={n}, w={w}, k={k}: {lhs} != {rhs}"))?;
            ensure(report.holds(), || format!("column counts disagree for n={n}, w={w}, k={k}"))?;
        }
        codes += 1;
    }
    let triples = [(6, 2, 10), (7, 3, 9), (8, 4, 16), (9, 3, 21), (10, 5, 7)];
    for (n, d, m) in triples {
        let rows = binary_constraints(n, d, Some(m)).map_err(|e| e.to_string())?;
        for k in 0..=n {
            let find = |want: Provenance| rows.iter().find(|r| r.provenance == want).cloned().ok_or("row missing");
            let minus = find(Provenance::BinarySplitMinus { k, m })?;
            let plus = find(Provenance::BinarySplitPlus { k, m })?;
            let parity = find(Provenance::BinaryParity { k, m })?;
            for i in d..=n {
                ensure(minus.coefficient(i) + plus.coefficient(i) == -parity.coefficient(i), || {
                    format!("split rows do not sum to the parity row at n={n}, k={k}, i={i}")
                })?;
            }
            ensure(&minus.rhs + &plus.rhs == -parity.rhs.clone(), || format!("split right-hand sides, n={n}, k={k}"))?;
        }
    }
    Ok(format!("{checked} Krawtchouk identities, 50 codes with exact column identities, 5 split triples"))
}

fn leaf_pointers(v: &Value, path: String, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => map.iter().for_each(|(k, x)| leaf_pointers(x, format!("{path}/{k}"), out)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, x)| leaf_pointers(x, format!("{path}/{i}"), out)),
        _ => out.push(path),
    }
}

fn mutate(v: &mut Value, rng: &mut ChaCha8Rng) {
    *v = match v.take() {
        Value::Null => Value::from(1),
        Value::Bool(b) => Value::Bool(!b),
        Value::Number(x) => match x.as_u64() {
            Some(u) if u > 0 && rng.gen_bool(0.5) => Value::from(u - 1),
            Some(u) => Value::from(u + 1),
            None => Value::from(x.as_f64().unwrap_or(0.0) + 1.0),
        },
        Value::String(s) => {
            let changed = match s.split_once('/') {
                Some((p, q)) if p.parse::<BigInt>().is_ok() => {
                    let p: BigInt = p.parse().unwrap();
                    format!("{}/{q}", p + rng.gen_range(1..5))
                }
                _ => format!("{s}x"),
            };
            Value::String(changed)
        }
        other => other,
    };
}

fn certificates(c: &Collected) -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut texts = Vec::new();
    let mut lps = 0;
    for (idx, r) in c.results.iter().enumerate() {
        let bundle = CertificateBundle::from_result(r).map_err(|e| e.to_string())?;
        lps += bundle.lps.len() + bundle.cells.iter().filter(|c| c.lp.is_some()).count();
        let text = bundle.to_json().map_err(|e| e.to_string())?;
        let path = dir.path().join(format!("cert{idx}.json"));
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        let out = cli::run(["cwbound", "verify", path.to_str().unwrap()]);
        ensure(out.code == 0, || format!("{} rejected: {}", r.query, out.stderr))?;
        texts.push(text);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let path = dir.path().join("mutant.json");
    for round in 0..100 {
        let pick = rng.gen_range(0..texts.len());
        let mut value: Value = serde_json::from_str(&texts[pick]).unwrap();
        let mut leaves = Vec::new();
        leaf_pointers(&value, String::new(), &mut leaves);
        let leaf = &leaves[rng.gen_range(0..leaves.len())];
        mutate(value.pointer_mut(leaf).unwrap(), &mut rng);
        std::fs::write(&path, serde_json::to_string(&value).unwrap()).map_err(|e| e.to_string())?;
        let out = cli::run(["cwbound", "verify", path.to_str().unwrap()]);
        ensure(out.code != 0, || format!("mutation {round} at {leaf} was accepted"))?;
    }
    Ok(format!("{} certificates ({lps} LPs) accepted; 100 single-field mutations rejected", texts.len()))
}

fn main() {
    let collected = RefCell::new(Collected::default());
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("1 A(27,8,13) bound", Box::new(|| bound_27_8_13(&mut collected.borrow_mut()))),
        ("2 A(27,8,13) constraints", Box::new(rows_27_8_13)),
        ("3 A(27,12,12) column data", Box::new(column_rows_27_12_12)),
        ("4 A(27,12,12) LP value", Box::new(|| descent_27_12_12(&mut collected.borrow_mut()))),
        ("5 improved rows", Box::new(|| improved_rows(&mut collected.borrow_mut()))),
        ("6 oracle sandwich", Box::new(sandwich)),
        ("7 constraint validity", Box::new(validity)),
        ("8 identities", Box::new(identities)),
        ("9 certificate round trip", Box::new(|| certificates(&collected.borrow()))),
    ];
    let mut failures = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{t:.2?}]"),
            Err(msg) => {
                failures += 1;
                println!("FAIL  criterion {name}: {msg} [{t:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
