//! Exit criteria. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p infobound --test acceptance -- --nocapture` to see them.

use std::cell::Cell;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use infobound::bounds::{
    absorption_inequality_slack, min_absorbing_mass, storage_bound_bits, SystemSpec,
};
use infobound::format::round_sig;
use infobound::qparser::{self, ParseErrorKind};
use infobound::quantity::{rel_diff, Dimension, Quantity};
use infobound::schwarzschild::{
    entropy, entropy_from_area, entropy_increase, horizon_area, mass_from_radius, min_bit_energy,
    radius, BlackHole,
};
use infobound::{cli, PhysicalConstants};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

const K: PhysicalConstants = PhysicalConstants::SI;
const CASES: u32 = 1000;
const IDENTITY_TOL: f64 = 1e-12;
const RUNTIME_LIMIT: Duration = Duration::from_secs(1);

fn report(id: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "criterion {id} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

/// Runs the CLI in-process and returns (exit code, stdout, elapsed).
fn cli(args: &[&str]) -> (i32, String, Duration) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let start = Instant::now();
    let code = cli::run(
        std::iter::once("infobound").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), start.elapsed())
}

fn num(report: &Value, key: &str) -> f64 {
    report[key]["value"].as_f64().unwrap()
}

/// Within one order of magnitude of the quoted figure.
fn same_order(x: f64, quoted: f64) -> bool {
    (x / quoted).log10().abs() < 1.0
}

fn bound_json(args: &[&str]) -> (Value, Duration) {
    let mut full = vec!["bound"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let (code, out, elapsed) = cli(&full);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    (v[0].clone(), elapsed)
}

fn device() -> (Value, Duration) {
    bound_json(&["--length", "0.1 m", "--mass", "1 kg", "--entropy", "1e23 kB"])
}

fn pulse() -> (Value, Duration) {
    bound_json(&["--length", "1e-6 m", "--energy", "1e-5 J", "--entropy", "0 kB"])
}

#[test]
fn criterion_1_areal_limit_device() {
    let (r, elapsed) = device();
    let bh = num(&r, "bh_limit_bits");
    let ok = same_order(bh, 4e67)
        && rel_diff(bh, 4.3375515040516256e67) < 1e-12
        && elapsed < RUNTIME_LIMIT;
    report(
        1,
        "areal limit, 0.1 m device",
        ok,
        &format!("bh_limit = {bh:.4e} bits (quoted 4e67), runtime {elapsed:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_2_storage_bound_device() {
    let (r, _) = device();
    let n = num(&r, "n_max_bits");
    let t1 = num(&r, "term_quadratic");
    let t2 = num(&r, "term_entropy");
    let gap = num(&r, "log10_gap");
    let ok = same_order(n, 2e42)
        && same_order(t1, 1e16)
        && rel_diff(t2, 1e23) < 1e-12
        && (gap - 25.0).abs() <= 1.0;
    report(
        2,
        "storage bound, 0.1 m / 1 kg device",
        ok,
        &format!("n_max = {n:.4e} (quoted 2e42), T1 = {t1:.4e}, T2 = {t2:.4e}, gap = {gap:.3}"),
    );
    assert!(ok);
}

#[test]
fn criterion_3_femtosecond_pulse() {
    let (r, elapsed) = pulse();
    let n = num(&r, "n_max_bits");
    let bh = num(&r, "bh_limit_bits");
    let gap = num(&r, "log10_gap");
    let ok = same_order(n, 2e15)
        && same_order(bh, 4e57)
        && (gap - 42.0).abs() <= 1.0
        && elapsed < RUNTIME_LIMIT;
    report(
        3,
        "10 fs / 1 GW pulse",
        ok,
        &format!("n_max = {n:.4e} (quoted 2e15), bh_limit = {bh:.4e} (quoted 4e57), gap = {gap:.3}"),
    );
    assert!(ok);
}

#[test]
fn criterion_4_landauer_cancellation() {
    let start = Instant::now();
    let c2 = K.c.pow_int(2).unwrap();
    let worst = Cell::new(0.0f64);
    let result = runner().run(&(log_uniform(1.0, 1e40), 0.5f64..10.0), |(m, mu)| {
        let hole = BlackHole::from_kilograms(m).unwrap();
        let dm = min_bit_energy(&K, &hole, mu).unwrap().div(&c2).unwrap();
        let ds = entropy_increase(&K, &hole, &dm).unwrap();
        let floor = K.k_b.scale(2.0 * PI / mu).unwrap();
        let d = rel_diff(ds.magnitude(), floor.magnitude());
        worst.set(worst.get().max(d));
        prop_assert!(d < IDENTITY_TOL);
        Ok(())
    });
    let elapsed = start.elapsed();
    let ok = result.is_ok() && elapsed < RUNTIME_LIMIT;
    report(
        4,
        "per-bit entropy floor independent of M",
        ok,
        &format!("{CASES} cases, worst rel diff {:.2e}, runtime {elapsed:?}", worst.get()),
    );
    assert!(ok, "{result:?}");
}

#[test]
fn criterion_5_identities() {
    let worst = [Cell::new(0.0f64), Cell::new(0.0), Cell::new(0.0)];
    let entropy_forms = runner().run(&log_uniform(1e-3, 1e45), |m| {
        let hole = BlackHole::from_kilograms(m).unwrap();
        let a = entropy(&K, &hole).unwrap().magnitude();
        let b = entropy_from_area(&K, &horizon_area(&K, &hole).unwrap())
            .unwrap()
            .magnitude();
        worst[0].set(worst[0].get().max(rel_diff(a, b)));
        prop_assert!(rel_diff(a, b) < IDENTITY_TOL);
        Ok(())
    });
    let bound_forms = runner().run(
        &(log_uniform(1e-9, 1e3), log_uniform(1e-20, 1e30), log_uniform(1e-3, 1e20)),
        |(l, u, s_kb)| {
            let spec = SystemSpec::with_default_mu(
                Quantity::meters(l).unwrap(),
                Quantity::joules(u).unwrap(),
                K.k_b.scale(s_kb).unwrap(),
            )
            .unwrap();
            let b = storage_bound_bits(&K, &spec).unwrap();
            prop_assume!(b.rhs >= 0.0);
            let hole = min_absorbing_mass(&K, &spec.length()).unwrap();
            let slack = absorption_inequality_slack(&K, &spec, 0.0, &hole).unwrap();
            let lhs = b.n_max_bits * std::f64::consts::LN_2;
            // the two sides differ by cancellation when S/k_B nearly equals
            // the energy terms; compare against the largest term
            let scale = b.term_linear.max(b.term_quadratic).max(b.term_entropy);
            let d = (lhs - slack).abs() / scale;
            worst[1].set(worst[1].get().max(d));
            prop_assert!(d < IDENTITY_TOL);
            Ok(())
        },
    );
    let radius_inverse = runner().run(&log_uniform(1e-3, 1e45), |m| {
        let hole = BlackHole::from_kilograms(m).unwrap();
        let back = mass_from_radius(&K, &radius(&K, &hole).unwrap()).unwrap();
        let d = rel_diff(back.mass().magnitude(), m);
        worst[2].set(worst[2].get().max(d));
        prop_assert!(d < IDENTITY_TOL);
        Ok(())
    });
    let ok = entropy_forms.is_ok() && bound_forms.is_ok() && radius_inverse.is_ok();
    report(
        5,
        "identity suite",
        ok,
        &format!(
            "area vs mass entropy {:.1e}, n_max ln2 vs slack at M_min {:.1e}, radius inverse {:.1e}",
            worst[0].get(), worst[1].get(), worst[2].get()
        ),
    );
    assert!(ok, "{entropy_forms:?} {bound_forms:?} {radius_inverse:?}");
}

fn spec(l: f64, u: f64, s_kb: f64) -> SystemSpec {
    SystemSpec::with_default_mu(
        Quantity::meters(l).unwrap(),
        Quantity::joules(u).unwrap(),
        K.k_b.scale(s_kb).unwrap(),
    )
    .unwrap()
}

fn n_max(s: &SystemSpec) -> f64 {
    storage_bound_bits(&K, s).unwrap().n_max_bits
}

#[test]
fn criterion_6_monotonicity() {
    // S is drawn as a fraction of the energy terms, so that every perturbation
    // below moves the bound by far more than f64 resolution.
    let strategy = (
        log_uniform(1e-9, 1e3),
        log_uniform(1e-20, 1e30),
        log_uniform(1e-6, 0.99),
        1.01f64..10.0,
    );
    let violations = Cell::new(0u32);
    let checked = Cell::new(0u32);
    let result = runner().run(&strategy, |(l, u, frac, f)| {
        let s_kb = frac * storage_bound_bits(&K, &spec(l, u, 0.0)).unwrap().rhs;
        let base = spec(l, u, s_kb);
        let n0 = n_max(&base);
        prop_assume!(n0 > 0.0);
        checked.set(checked.get() + 1);
        let up_u = n_max(&spec(l, u * f, s_kb)) > n0;
        let up_l = n_max(&spec(l * f, u, s_kb)) > n0;
        let down_s = n_max(&spec(l, u, s_kb * f)) < n0;
        let m_min = min_absorbing_mass(&K, &base.length()).unwrap();
        let bigger = BlackHole::from_kilograms(m_min.mass().magnitude() * f).unwrap();
        let slack_up = absorption_inequality_slack(&K, &base, 0.0, &bigger).unwrap()
            > absorption_inequality_slack(&K, &base, 0.0, &m_min).unwrap();
        if !(up_u && up_l && down_s && slack_up) {
            violations.set(violations.get() + 1);
        }
        prop_assert!(up_u && up_l && down_s && slack_up);
        Ok(())
    });
    let ok = result.is_ok() && violations.get() == 0;
    report(
        6,
        "monotonicity suite",
        ok,
        &format!("{} feasible specs checked, {} violations", checked.get(), violations.get()),
    );
    assert!(ok, "{result:?}");
}

fn random_quantity() -> impl Strategy<Value = Quantity> {
    (
        1.0f64..10.0,
        -40i32..40,
        any::<bool>(),
        prop::array::uniform4(-4i32..=4),
    )
        .prop_map(|(m, e, neg, dims)| {
            let x = m * 10f64.powi(e) * if neg { -1.0 } else { 1.0 };
            Quantity::new(x, Dimension::from_exponents(dims)).unwrap()
        })
}

#[test]
fn criterion_7_parser_suite() {
    let worst = Cell::new(0.0f64);
    let roundtrip = runner().run(&random_quantity(), |q| {
        let text = q.render();
        let back = qparser::parse(&text).unwrap().eval().unwrap();
        prop_assert_eq!(back.dimension(), q.dimension());
        let d = rel_diff(back.magnitude(), q.magnitude());
        worst.set(worst.get().max(d));
        prop_assert!(d < IDENTITY_TOL, "{} -> {}", text, back);
        Ok(())
    });

    let ev = |s: &str| qparser::evaluate_str(s).unwrap();
    let (a, b, c) = (ev("6 m"), ev("2 s"), ev("3 kg"));
    let left_assoc = ev("6 m / 2 s * 3 kg");
    let expect = a.div(&b).unwrap().mul(&c).unwrap();
    let fixture_1 = left_assoc.dimension() == expect.dimension()
        && rel_diff(left_assoc.magnitude(), expect.magnitude()) < IDENTITY_TOL;
    let pow_tight = ev("6 m / (2 s) ^ 2");
    let expect = a.div(&b.pow_int(2).unwrap()).unwrap();
    let fixture_2 = pow_tight.dimension() == expect.dimension()
        && rel_diff(pow_tight.magnitude(), expect.magnitude()) < IDENTITY_TOL
        && ev("6 / 2 ^ 2").magnitude() == 1.5;
    let additive = ev("1 m + 2 m * 3");
    let fixture_3 = additive.magnitude() == 7.0 && ev("10 J - 4 J - 3 J").magnitude() == 3.0;

    let error_cases = [
        "2 ^ x", "", "1 +", "(1 m", "1 m)", "* 2", "2 furlong", "1 # 2", "2^1.5", "1e999 m",
        "1 m 2 s", ")",
    ];
    let offsets_ok = error_cases.iter().all(|text| match qparser::parse(text) {
        Err(e) => e.offset <= text.chars().count(),
        Ok(_) => false,
    });
    let x_offset = qparser::parse("2 ^ x").unwrap_err();
    let offsets_ok = offsets_ok && x_offset.offset == 4 && x_offset.kind == ParseErrorKind::Syntax;
    let eval_err = qparser::parse("1 m + 1 J").unwrap().eval().unwrap_err();
    let span_ok = eval_err.span.start == 0 && eval_err.span.end == 9;

    let ok = roundtrip.is_ok() && fixture_1 && fixture_2 && fixture_3 && offsets_ok && span_ok;
    report(
        7,
        "parser suite",
        ok,
        &format!(
            "{CASES} round trips (worst {:.1e}), precedence fixtures {}/{}/{}, {} error cases with offsets",
            worst.get(),
            fixture_1, fixture_2, fixture_3,
            error_cases.len()
        ),
    );
    assert!(ok, "{roundtrip:?}");
}

fn normalize(v: &Value) -> Value {
    match v {
        Value::Number(n) => {
            let x = round_sig(n.as_f64().unwrap(), 6);
            serde_json::Number::from_f64(x).map(Value::Number).unwrap()
        }
        Value::Array(a) => Value::Array(a.iter().map(normalize).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, v)| (k.clone(), normalize(v))).collect()),
        other => other.clone(),
    }
}

#[test]
fn criterion_8_end_to_end_golden() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let scenario = root.join("scenarios/worked_examples.json");
    let golden_path = root.join("tests/golden/worked_examples.json");
    let (code, out, _) = cli(&["report", scenario.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&golden_path, &out).unwrap();
    }
    let golden: Value = serde_json::from_str(&std::fs::read_to_string(&golden_path).unwrap()).unwrap();
    let actual: Value = serde_json::from_str(&out).unwrap();
    let names: Vec<_> = actual
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap().to_string())
        .collect();
    let ok = normalize(&golden) == normalize(&actual) && names == ["device", "pulse"];
    report(
        8,
        "scenario report matches golden",
        ok,
        &format!("{} reports {:?}, compared at 6 significant digits", names.len(), names),
    );
    assert!(ok, "{out}");
}
