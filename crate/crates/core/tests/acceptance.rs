//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit when
//! any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use fraciter::bench::{self, case, error_table, published, CaseOptions, Table, TableId};
use fraciter::nonlinear::{dj_polynomial, hes_polynomial};
use fraciter::profiler::{profile, Budget};
use fraciter::{DecompositionKind, FracExponent, OperatorExpr, SeriesConfig, TimeSeries, Symbolic};

use common::props::*;
use common::{cell_matches, factor, fe, parse_listing, symbolic_iterates};

const HES: DecompositionKind = DecompositionKind::Hes;
const DJ: DecompositionKind = DecompositionKind::DJ;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Check = fn() -> Outcome;

/// Compares every numeric cell of a recomputed error table with the
/// printed one. Columns `t` and `x` are labels.
fn compare_errors(computed: &Table, printed: &Table) -> (usize, usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (r, row) in printed.rows.iter().enumerate() {
        for (j, name) in printed.columns.iter().enumerate() {
            if name == "t" || name == "x" || row[j].is_nan() {
                continue;
            }
            let got = computed.cell(r, name).unwrap_or(f64::NAN);
            checked += 1;
            if !cell_matches(got, row[j], 1.05) {
                bad.push(format!(
                    "(t={}, x={}) {name}: computed {got:.3e}, printed {:.3e}",
                    row[0], row[1], row[j]
                ));
            }
        }
    }
    (checked, bad.len(), bad)
}

fn table_check(id: TableId) -> Result<(usize, usize, Vec<String>), String> {
    let computed = bench::compute(id, &CaseOptions::default()).map_err(|e| e.to_string())?;
    Ok(compare_errors(&computed, &published(id)))
}

fn summarize(label: &str, (checked, failed, bad): &(usize, usize, Vec<String>)) -> String {
    let mut s = format!("{label}: {}/{checked} cells within tolerance", checked - failed);
    if let Some(first) = bad.first() {
        s.push_str(&format!("; first mismatch {first}"));
    }
    s
}

fn criterion_1() -> Outcome {
    match table_check(TableId::Errors1) {
        Ok(r) => outcome(r.1 == 0, summarize("table 1", &r)),
        Err(e) => outcome(false, e),
    }
}

fn criterion_2() -> Outcome {
    let r = match table_check(TableId::Errors2) {
        Ok(r) => r,
        Err(e) => return outcome(false, e),
    };
    let c = case(2, &CaseOptions::default()).unwrap();
    let (he, dj) = match (error_table(&c, HES, c.k_max), error_table(&c, DJ, c.k_max)) {
        (Ok(h), Ok(d)) => (h, d),
        (Err(e), _) | (_, Err(e)) => return outcome(false, e.to_string()),
    };
    let gap = he
        .errors
        .iter()
        .flatten()
        .zip(dj.errors.iter().flatten())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let pass = r.1 == 0 && gap <= 1e-15;
    outcome(pass, format!("{}; max |He - D-J| = {gap:.1e}", summarize("table 2", &r)))
}

fn criterion_3() -> Outcome {
    let r = match table_check(TableId::Errors3) {
        Ok(r) => r,
        Err(e) => return outcome(false, e),
    };
    let early = match bench::compute(TableId::Early3, &CaseOptions::default()) {
        Ok(t) => t,
        Err(e) => return outcome(false, e.to_string()),
    };
    let Some(row) = (0..early.rows.len()).find(|&i| early.cell(i, "x") == Some(0.5)) else {
        return outcome(false, "table 5 has no x = 0.5 row");
    };
    let exact = early.cell(row, "exact").unwrap();
    let (ae_he, ae_dj) = (early.cell(row, "ae_hes").unwrap(), early.cell(row, "ae_dj").unwrap());
    let exact_ok = (exact - 0.143426115271).abs() <= 5e-13;
    let ae_ok = factor(ae_he, 6.27e-12) <= 2.0 && factor(ae_dj, 1.17e-12) <= 2.0;
    outcome(
        r.1 == 0 && exact_ok && ae_ok,
        format!(
            "{}; table 5 x=0.5: exact {exact:.12}, AE He {ae_he:.2e}, AE D-J {ae_dj:.2e}",
            summarize("table 3", &r)
        ),
    )
}

fn criterion_4() -> Outcome {
    let r = match table_check(TableId::Errors4) {
        Ok(r) => r,
        Err(e) => return outcome(false, e),
    };
    let t7 = match bench::compute(TableId::Solutions4, &CaseOptions::default()) {
        Ok(t) => t,
        Err(e) => return outcome(false, e.to_string()),
    };
    let Some(row) = (0..t7.rows.len()).find(|&i| t7.cell(i, "t") == Some(0.2) && t7.cell(i, "x") == Some(0.25))
    else {
        return outcome(false, "table 7 has no (0.2, 0.25) row");
    };
    let dj = t7.cell(row, "dj").unwrap();
    let ok7 = format!("{dj:.9}") == "0.043402778";
    outcome(
        r.1 == 0 && ok7,
        format!("{}; table 7 D-J at (0.2, 0.25) = {dj:.9}", summarize("table 6", &r)),
    )
}

const HES_LISTING: [&str; 6] = [
    "u_{0}^2",
    "2u_{0}u_{1}",
    "2u_{0}u_{2} + u_{1}^2",
    "2u_{0}u_{3} + 2u_{1}u_{2}",
    "2u_{0}u_{4} + 2u_{1}u_{3} + u_{2}^2",
    "2u_{0}u_{5} + 2u_{1}u_{4} + 2u_{2}u_{3}",
];

const DJ_LISTING: [&str; 6] = [
    "u_{0}^2",
    "u_{1}(2u_{0} + u_{1})",
    "u_{2}(2u_{0} + 2u_{1} + u_{2})",
    "u_{3}(2u_{0} + 2u_{1} + 2u_{2} + u_{3})",
    "u_{4}(2u_{0} + 2u_{1} + 2u_{2} + 2u_{3} + u_{4})",
    "u_{5}(2u_{0} + 2u_{1} + 2u_{2} + 2u_{3} + 2u_{4} + u_{5})",
];

fn as_polynomial(s: &TimeSeries<Symbolic>) -> Option<Symbolic> {
    match s.len() {
        0 => Some(Symbolic::zero()),
        1 => s.coefficient(FracExponent::ZERO).cloned(),
        _ => None,
    }
}

fn criterion_5() -> Outcome {
    let us = symbolic_iterates(5);
    let n = OperatorExpr::u().pow(2);
    let mut bad = Vec::new();
    for k in 0..=5 {
        for (label, got, printed) in [
            ("H", hes_polynomial(&n, &us, k), HES_LISTING[k]),
            ("J", dj_polynomial(&n, &us, k), DJ_LISTING[k]),
        ] {
            let got = got.ok().as_ref().and_then(as_polynomial);
            if got.as_ref() != Some(&parse_listing(printed)) {
                bad.push(format!("{label}_{k} = {}", got.map_or("?".into(), |g| g.to_string())));
            }
        }
    }
    if bad.is_empty() {
        let j5 = dj_polynomial(&n, &us, 5).ok().as_ref().and_then(as_polynomial).unwrap();
        outcome(true, format!("12/12 polynomials equal the listing; J_5 = {j5}"))
    } else {
        outcome(false, format!("mismatches: {}", bad.join(", ")))
    }
}

fn criterion_6() -> Outcome {
    let opts = CaseOptions::default();
    let budget = Budget::default();
    let c3 = case(3, &opts).unwrap();
    let (h3, d3) = (profile(&c3, HES, 5, budget), profile(&c3, DJ, 5, budget));
    let ok3 = h3.completed && d3.completed && d3.wall_seconds > h3.wall_seconds && d3.peak_term_count > h3.peak_term_count;

    let c2 = case(2, &opts).unwrap();
    let (h2, d2) = (profile(&c2, HES, c2.k_max, budget), profile(&c2, DJ, c2.k_max, budget));
    let ok2 = h2.completed
        && d2.completed
        && h2.total_multiplications == d2.total_multiplications
        && h2.peak_term_count == d2.peak_term_count;

    let tight = opts.with_config(SeriesConfig::default().with_term_cap(1000));
    let c5 = case(5, &tight).unwrap();
    let (h5, d5) = (profile(&c5, HES, 5, budget), profile(&c5, DJ, 5, budget));
    let ok5 = h5.completed && !d5.completed && d5.failure_iteration == Some(4);

    outcome(
        ok2 && ok3 && ok5,
        format!(
            "case 3: He {:.3}s/{} terms, D-J {:.3}s/{} terms; case 2: {} vs {} multiplications; \
             case 5 (cap 1000): He completed={}, D-J completed={} at iteration {:?}",
            h3.wall_seconds,
            h3.peak_term_count,
            d3.wall_seconds,
            d3.peak_term_count,
            h2.total_multiplications,
            d2.total_multiplications,
            h5.completed,
            d5.completed,
            d5.failure_iteration
        ),
    )
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        rng,
    );
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion_7() -> Outcome {
    let mut results = vec![
        run_property("ring axioms", 64, (exact_series(3, 2), exact_series(3, 2), exact_series(3, 2)), |(a, b, c)| {
            ring_axioms(&a, &b, &c)
        }),
        run_property("product expansion", 64, (power_terms(5), power_terms(5)), |(a, b)| {
            product_matches_brute_force(&a, &b)
        }),
        run_property("D-J telescoping", 64, iterates(6), |us| {
            nonlinearities().iter().try_for_each(|(_, n)| dj_telescoping(n, &us))
        }),
        run_property("He oracle", 64, iterates(6), |us| {
            nonlinearities().iter().try_for_each(|(name, n)| hes_matches_oracle(name, n, &us))
        }),
        run_property("J semigroup", 64, (float_series(4, 3), order(), order()), |(s, a, b)| semigroup(&s, a, b)),
        run_property(
            "J linearity",
            64,
            (float_series(4, 3), float_series(4, 3), -2.0..2.0f64, -2.0..2.0f64, order()),
            |(s1, s2, c1, c2, a)| linearity(&s1, &s2, c1, c2, a),
        ),
        run_property("Caputo inverse", 64, (float_series(4, 3), order()), |(s, a)| inverse_pair(&s, a)),
        run_property(
            "evaluation homomorphism",
            64,
            (float_series(3, 3), float_series(3, 3), 0.0..1.5f64, 0.0..0.8f64),
            |(a, b, x, t)| eval_homomorphism(&a, &b, x, t),
        ),
        run_property("exp-rational algebra", 64, (exp_terms(), exp_terms(), -2.0..2.0f64), |(a, b, x)| {
            exp_rational_checks(&a, &b, x)
        }),
    ];
    let points: Vec<(f64, f64)> = [0.1, 0.5, 1.0]
        .iter()
        .flat_map(|&x| [0.0, 0.01, 0.03, 0.05].map(|t| (x, t)))
        .collect();
    let mut worst = Vec::new();
    for id in 1..=5 {
        let r = common::exact_series(id, 12).residuals(&points);
        let m = r.iter().cloned().fold(0.0, f64::max);
        worst.push(format!("{m:.0e}"));
        if m > 1e-8 {
            results.push(Err(format!("case {id} residual {m:e}")));
        }
    }
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    if failures.is_empty() {
        outcome(true, format!("9 property families hold; residuals by case [{}]", worst.join(", ")))
    } else {
        outcome(false, failures.join("; "))
    }
}

fn fractional_run(kind: DecompositionKind) -> Result<(Vec<f64>, String), String> {
    let opts = CaseOptions::default().with_alpha(fe(9, 10));
    let c = case(1, &opts).map_err(|e| e.to_string())?;
    let run = c.problem.run(kind, 5).into_result().map_err(|e| e.to_string())?;
    let sums = (0..=5)
        .map(|k| run.eval_partial(k, 0.5, 0.5))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let mut text = String::new();
    for k in 0..=5 {
        text.push_str(&run.render_iterate(k).map_err(|e| e.to_string())?);
        text.push('\n');
    }
    for s in &sums {
        text.push_str(&format!("{:016x}\n", s.to_bits()));
    }
    Ok((sums, text))
}

fn monotone(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] >= w[0]) || v.windows(2).all(|w| w[1] <= w[0])
}

fn criterion_8() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for kind in [HES, DJ] {
        let (first, second) = match (fractional_run(kind), fractional_run(kind)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return outcome(false, e),
        };
        let same = first.1 == second.1;
        let mono = monotone(&first.0);
        pass &= same && mono;
        let sums: Vec<String> = first.0.iter().map(|s| format!("{s:.6}")).collect();
        parts.push(format!(
            "{kind}: S_0..S_5 = [{}], monotone={mono}, repeat identical={same}",
            sums.join(", ")
        ));
    }
    outcome(pass, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(u32, Duration, Check); 8] = [
        (1, Duration::from_secs(10), criterion_1),
        (2, Duration::from_secs(10), criterion_2),
        (3, Duration::from_secs(30), criterion_3),
        (4, Duration::from_secs(20), criterion_4),
        (5, Duration::from_secs(1), criterion_5),
        (6, Duration::from_secs(120), criterion_6),
        (7, Duration::from_secs(60), criterion_7),
        (8, Duration::from_secs(5), criterion_8),
    ];
    let mut failed = 0;
    for (n, limit, check) in criteria {
        let clock = Instant::now();
        let mut r = check();
        let elapsed = clock.elapsed();
        if elapsed > limit {
            r.pass = false;
            r.detail.push_str(&format!("; exceeded {}s", limit.as_secs()));
        }
        if !r.pass {
            failed += 1;
        }
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!("criterion {n}: {status} ({:.2}s) {}", elapsed.as_secs_f64(), r.detail);
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
