//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line to
//! stdout (bypassing the test harness capture) and the test fails if any does.

use num_bigint::BigInt;
use num_integer::Integer;
use num_complex::Complex64;
use qgauss::arith::kronecker;
use qgauss::exactnum::*;
use qgauss::gauss::*;
use qgauss::hecke::*;
use qgauss::qform::*;
use qgauss::verify::{self, SuiteReport};
use qgauss::weil::{theta_transform_residual, WeilContext};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

const SEED: u64 = 42;
/// Largest accepted residual of the theta transformation check.
const THETA_TOLERANCE: f64 = 1e-8;
const THETA_RADIUS: i64 = 25;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn suite_outcome(r: &SuiteReport, extra: Option<(bool, String)>) -> Outcome {
    let failing: Vec<String> = r.cases.iter().filter(|c| !c.ok).take(2).map(|c| c.record.to_string()).collect();
    let (extra_ok, extra_msg) = extra.unwrap_or((true, String::new()));
    let detail = format!("{}/{} cases, coverage {:?}{}{}", r.passed(), r.total(), r.coverage(), extra_msg,
        if failing.is_empty() { String::new() } else { format!("; failing: {}", failing.join(" | ")) });
    verdict(r.ok() && extra_ok, detail)
}

fn classical_value(a: i64, c: i64) -> Cyclotomic {
    let i = Cyclotomic::e_frac(1, 4);
    match c % 4 {
        1 => sqrt_int(c).scale_int(&kronecker(a, c).into()),
        3 => (sqrt_int(c) * i).scale_int(&kronecker(a, c).into()),
        0 => {
            let eps_a = if a % 4 == 1 { Cyclotomic::one() } else { i.clone() };
            (Cyclotomic::one() + i) * eps_a.conj() * sqrt_int(c).scale_int(&kronecker(c, a).into())
        }
        _ => Cyclotomic::zero(),
    }
}

fn criterion_1() -> Outcome {
    let g = make_even_sym(&[vec![2]]).unwrap();
    let mut checked = 0;
    for c in 1..=60i64 {
        for a in (1..=c).filter(|a| a.gcd(&c) == 1) {
            let brute = brute_gauss(&GaussSpec::new(&g, a, c).unwrap());
            if brute != classical_value(a, c) {
                return verdict(false, format!("mismatch at a={a} c={c}: {}", brute.pretty()));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} pairs (a, c) with c <= 60"))
}

fn criterion_2() -> Outcome {
    let r = verify::gauss_coprime_suite(SEED, 50);
    let definite = r.count_where(|c| c.tag == "definite");
    let indefinite = r.count_where(|c| c.tag == "indefinite");
    suite_outcome(&r, Some((r.total() == 50 && definite > 0 && indefinite > 0, String::new())))
}

fn criterion_3() -> Outcome {
    let r = verify::gauss_divides_suite(SEED, 30, 10);
    let zero = r.count_where(|c| c.tag == "delta0");
    suite_outcome(&r, Some((r.total() == 30 && zero >= 5, format!(", delta0 = {zero}"))))
}

fn milgram_fixtures() -> Vec<(String, EvenSymMatrix)> {
    let mut out: Vec<(String, EvenSymMatrix)> = (1..=49).map(|n| (format!("A{n}"), an_matrix(n))).collect();
    let entries: Vec<i64> = (-25..=25).filter(|v| *v != 0).map(|v| 2 * v).collect();
    for &x in &entries {
        if x.abs() <= 50 {
            out.push((format!("diag({x})"), make_even_sym(&[vec![x]]).unwrap()));
        }
        for &y in entries.iter().filter(|y| y.abs() >= x.abs()) {
            if (x * y).abs() <= 50 {
                out.push((format!("diag({x},{y})"), make_even_sym(&[vec![x, 0], vec![0, y]]).unwrap()));
            }
            for &z in entries.iter().filter(|z| z.abs() >= y.abs()) {
                if (x * y * z).abs() <= 50 {
                    let m = vec![vec![x, 0, 0], vec![0, y, 0], vec![0, 0, z]];
                    out.push((format!("diag({x},{y},{z})"), make_even_sym(&m).unwrap()));
                }
            }
        }
    }
    out.push(("U".into(), hyperbolic_plane()));
    out.push(("U+A2".into(), direct_sum(&hyperbolic_plane(), &an_matrix(2))));
    out
}

fn criterion_4() -> Outcome {
    let fixtures = milgram_fixtures();
    let mut checked = 0;
    for (name, g) in &fixtures {
        let d = g.det_i64().abs();
        assert!(d <= 50);
        for c in (-20i64..=20).filter(|&c| c != 0 && c.gcd(&d) == 1) {
            let lhs = discriminant_sum(g, c);
            match milgram_extended(g, c) {
                Ok(rhs) if rhs == lhs => checked += 1,
                other => return verdict(false, format!("{name} c={c}: enumerated {} closed {other:?}", lhs.pretty())),
            }
        }
    }
    pass(format!("{} lattices, {checked} (G, c) pairs", fixtures.len()))
}

fn criterion_5() -> Outcome {
    let r = verify::duality_suite(SEED, 50, 50, 20);
    let cov = r.coverage();
    let complete = cov.get("coprime") == Some(&50) && cov.get("divides") == Some(&50) && cov.get("poisson") == Some(&20);
    suite_outcome(&r, Some((complete, String::new())))
}

fn criterion_6() -> Outcome {
    let r = verify::hyperplane_suite(SEED, 30);
    let cov = r.coverage();
    let spans = ["full", "vanishing", "inner"].iter().all(|k| cov.get(*k).copied().unwrap_or(0) > 0);
    suite_outcome(&r, Some((spans && r.total() == 30, String::new())))
}

fn criterion_7() -> Outcome {
    let r = verify::weil_suite(SEED, 20, 10);
    let relations = r.count_where(|c| c.tag == "relations");
    suite_outcome(&r, Some((relations == 4, String::new())))
}

fn criterion_8() -> Outcome {
    let cases = [(make_even_sym(&[vec![2]]).unwrap(), [1, 0, 1, 1]), (an_matrix(2), [2, 1, 5, 3])];
    let mut worst: f64 = 0.0;
    let mut components = 0;
    for (g, m) in &cases {
        let ctx = WeilContext::new(g).unwrap();
        let z = vec![Complex64::new(0.0, 0.0); g.dim()];
        for t in 0..ctx.size() {
            match theta_transform_residual(&ctx, t, *m, Complex64::new(0.0, 1.0), &z, THETA_RADIUS) {
                Ok(r) => worst = worst.max(r.residual),
                Err(e) => return verdict(false, format!("{:?} component {t}: {e}", g.rows())),
            }
            components += 1;
        }
    }
    verdict(worst < THETA_TOLERANCE, format!("{components} components, max residual {worst:.3e} (tolerance {THETA_TOLERANCE:e})"))
}

fn criterion_9() -> Outcome {
    let r = verify::counts_suite(SEED, 100, 100);
    let cov = r.coverage();
    suite_outcome(&r, Some((cov.get("prime") == Some(&100) && cov.get("general") == Some(&100), String::new())))
}

fn criterion_10() -> Outcome {
    let r = verify::markoff_suite(SEED, 30);
    let cov = r.coverage();
    let all_cases = (1..=4).all(|k| cov.get(&format!("case{k}")).copied().unwrap_or(0) > 0);
    suite_outcome(&r, Some((all_cases && cov.get("classical") == Some(&4), String::new())))
}

fn criterion_11() -> Outcome {
    let s = CycHeckeSpec::new(13, (1..=12).collect(), 37).unwrap();
    let h = match hecke_cyclotomic(&s, 0) {
        Ok(h) => h,
        Err(e) => return verdict(false, format!("thirteenth-root case: {e}")),
    };
    let target = Cyclotomic::from_bigint(BigInt::from(37).pow(6));
    let exact = h.route == HeckeRoute::Closed && h.value == target;
    let r = verify::hecke_suite(12);
    suite_outcome(&r, Some((exact, format!(", thirteenth-root case {} via {:?}", h.value.pretty(), h.route))))
}

fn criterion_12() -> Outcome {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qgauss"))
            .args(["--threads", threads, "verify", "--seed", &SEED.to_string(), "--suite", "gauss-coprime,counts,markoff"])
            .output()
            .expect("binary runs")
    };
    let (one, eight) = (run("1"), run("8"));
    let same = one.stdout == eight.stdout;
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap_or_default();
    let passed = v["all_passed"] == true && one.status.success() && eight.status.success();
    verdict(same && passed, format!("{} bytes, identical = {same}, all passed = {passed}", one.stdout.len()))
}

type Criterion = (u32, Duration, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (1, Duration::from_secs(5), criterion_1),
        (2, Duration::from_secs(60), criterion_2),
        (3, Duration::from_secs(60), criterion_3),
        (4, Duration::from_secs(30), criterion_4),
        (5, Duration::from_secs(120), criterion_5),
        (6, Duration::from_secs(30), criterion_6),
        (7, Duration::from_secs(120), criterion_7),
        (8, Duration::from_secs(10), criterion_8),
        (9, Duration::from_secs(60), criterion_9),
        (10, Duration::from_secs(120), criterion_10),
        (11, Duration::from_secs(30), criterion_11),
        (12, Duration::from_secs(120), criterion_12),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (k, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| verdict(false, format!("panicked: {:?}", e.downcast_ref::<String>())));
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = outcome.ok && in_time;
        let line = format!(
            "criterion {k}: {} ({}; {:.2}s of {}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        writeln!(out, "{line}").unwrap();
        if !ok {
            failed.push(line);
        }
    }
    assert!(failed.is_empty(), "failing criteria:\n{}", failed.join("\n"));
}
