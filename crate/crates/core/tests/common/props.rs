//! Property checks shared by the proptest suite and the acceptance runner.

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use fraciter::nonlinear::{apply_operator, dj_polynomial, hes_polynomial};
use fraciter::{Coefficient, Exact, ExpRationalSum, FracExponent, OperatorExpr, PowerSum, Scalar, SeriesConfig, TimeSeries};

use super::{brute_force_product, exp_terms_diff, exp_terms_eval, fe, ratio, ExpTerms};

pub type ExactSeries = TimeSeries<PowerSum<Exact>>;
pub type FloatSeries = TimeSeries<PowerSum<f64>>;

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

pub fn half_exponent() -> impl Strategy<Value = FracExponent> {
    (0i64..=4).prop_map(|n| fe(n, 2))
}

pub fn order() -> impl Strategy<Value = FracExponent> {
    (1i64..=15).prop_map(|n| fe(n, 10))
}

fn exact_coef() -> impl Strategy<Value = Exact> {
    (-5i64..=5, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Exact::from_ratio(ratio(n, d)))
}

fn float_coef() -> impl Strategy<Value = f64> {
    prop_oneof![-3.0..-0.1f64, 0.1..3.0f64]
}

pub fn exact_series(t_terms: usize, x_terms: usize) -> impl Strategy<Value = ExactSeries> {
    let coeff = prop::collection::vec((0u32..=3, exact_coef()), 1..=x_terms)
        .prop_map(|ts| PowerSum::from_terms(ts.into_iter().map(|(e, c)| (FracExponent::integer(e), c))));
    prop::collection::vec((half_exponent(), coeff), 1..=t_terms)
        .prop_map(|ts| TimeSeries::from_terms(ts, cfg()).unwrap())
}

pub fn float_series(t_terms: usize, x_terms: usize) -> impl Strategy<Value = FloatSeries> {
    let coeff = prop::collection::vec((half_exponent(), float_coef()), 1..=x_terms).prop_map(PowerSum::from_terms);
    prop::collection::vec((half_exponent(), coeff), 1..=t_terms)
        .prop_map(|ts| TimeSeries::from_terms(ts, cfg()).unwrap())
}

pub fn power_terms(n: usize) -> impl Strategy<Value = Vec<(FracExponent, f64)>> {
    prop::collection::vec((half_exponent(), float_coef()), n..=n)
}

pub fn exp_terms() -> impl Strategy<Value = ExpTerms> {
    prop::collection::btree_map((-2i64..=2, 0u32..=3), float_coef(), 1..=4)
}

pub fn iterates(n: usize) -> impl Strategy<Value = Vec<ExactSeries>> {
    prop::collection::vec(exact_series(2, 2), n..=n)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn fail<E: std::fmt::Display>(e: E) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// Largest coefficient magnitude across the series.
fn magnitude(s: &FloatSeries) -> f64 {
    s.iter()
        .flat_map(|(_, c)| c.terms().map(|(_, v)| v.abs()).collect::<Vec<_>>())
        .fold(0.0, f64::max)
}

fn close(a: &FloatSeries, b: &FloatSeries, rel: f64) -> Result<bool, TestCaseError> {
    let d = a.sub(b).map_err(fail)?;
    let scale = magnitude(a).max(magnitude(b)).max(1.0);
    Ok(magnitude(&d) <= rel * scale)
}

pub fn ring_axioms(a: &ExactSeries, b: &ExactSeries, c: &ExactSeries) -> Result<(), TestCaseError> {
    let m = |x: &ExactSeries, y: &ExactSeries| x.mul(y).map_err(fail);
    let s = |x: &ExactSeries, y: &ExactSeries| x.add(y).map_err(fail);
    ensure(m(a, b)? == m(b, a)?, || "multiplication does not commute".into())?;
    ensure(m(&m(a, b)?, c)? == m(a, &m(b, c)?)?, || "multiplication is not associative".into())?;
    ensure(m(a, &s(b, c)?)? == s(&m(a, b)?, &m(a, c)?)?, || "distributivity fails".into())?;
    ensure(s(a, &TimeSeries::zero(cfg()))? == *a, || "zero is not additive identity".into())?;
    let one = TimeSeries::monomial(FracExponent::ZERO, PowerSum::constant(Exact::one()), cfg()).map_err(fail)?;
    ensure(m(a, &one)? == *a, || "one is not multiplicative identity".into())?;
    ensure(s(a, &a.neg())?.is_zero(), || "a - a is not zero".into())
}

pub fn product_matches_brute_force(
    a: &[(FracExponent, f64)],
    b: &[(FracExponent, f64)],
) -> Result<(), TestCaseError> {
    let pa = PowerSum::from_terms(a.iter().copied());
    let pb = PowerSum::from_terms(b.iter().copied());
    let prod = pa.mul(&pb).map_err(fail)?;
    let expect = brute_force_product(a, b);
    for (mu, want) in &expect {
        let got = prod.coefficient(*mu).copied().unwrap_or(0.0);
        ensure((got - want).abs() <= 1e-12 * (1.0 + want.abs()), || {
            format!("x^{mu}: got {got}, expected {want}")
        })?;
    }
    let extra = prod.terms().any(|(mu, _)| !expect.contains_key(&mu));
    ensure(!extra, || "unexpected exponent".into())
}

/// The nonlinearities exercised by the decomposition checks.
pub fn nonlinearities() -> Vec<(&'static str, OperatorExpr)> {
    let u = OperatorExpr::u;
    vec![
        ("u^2", u().pow(2)),
        ("u^3", u().pow(3)),
        ("u*u_x", u().times(u().dx(1))),
    ]
}

pub fn dj_telescoping(n_expr: &OperatorExpr, us: &[ExactSeries]) -> Result<(), TestCaseError> {
    let mut total = TimeSeries::zero(cfg());
    let mut partial = TimeSeries::zero(cfg());
    for k in 0..us.len() {
        total.add_assign(&dj_polynomial(n_expr, us, k).map_err(fail)?).map_err(fail)?;
        partial.add_assign(&us[k]).map_err(fail)?;
        let direct = apply_operator(n_expr, &partial).map_err(fail)?;
        ensure(total == direct, || format!("sum of J_0..J_{k} differs from N(S_{k})"))?;
    }
    Ok(())
}

/// p^k coefficient of N(Σ p^i u_i), collected over ordered index tuples.
pub fn hes_oracle(name: &str, us: &[ExactSeries], k: usize) -> ExactSeries {
    let mut out = TimeSeries::zero(cfg());
    match name {
        "u*u_x" => {
            for i in 0..=k {
                let term = us[i].mul(&us[k - i].diff_x(1).unwrap()).unwrap();
                out.add_assign(&term).unwrap();
            }
        }
        _ => {
            let m = if name == "u^2" { 2 } else { 3 };
            let mut tuple = vec![0usize; m];
            loop {
                if tuple.iter().sum::<usize>() == k {
                    let mut prod = us[tuple[0]].clone();
                    for &i in &tuple[1..] {
                        prod = prod.mul(&us[i]).unwrap();
                    }
                    out.add_assign(&prod).unwrap();
                }
                let mut pos = 0;
                loop {
                    if pos == m {
                        return out;
                    }
                    tuple[pos] += 1;
                    if tuple[pos] <= k {
                        break;
                    }
                    tuple[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
    out
}

pub fn hes_matches_oracle(name: &str, n_expr: &OperatorExpr, us: &[ExactSeries]) -> Result<(), TestCaseError> {
    for k in 0..us.len() {
        let got = hes_polynomial(n_expr, us, k).map_err(fail)?;
        ensure(got == hes_oracle(name, us, k), || format!("H_{k} for N = {name} differs from the oracle"))?;
    }
    Ok(())
}

pub fn semigroup(s: &FloatSeries, a: FracExponent, b: FracExponent) -> Result<(), TestCaseError> {
    let twice = s.frac_integrate(a).and_then(|x| x.frac_integrate(b)).map_err(fail)?;
    let once = s.frac_integrate(a + b).map_err(fail)?;
    ensure(close(&twice, &once, 1e-12)?, || format!("J^{a} J^{b} differs from J^{}", a + b))
}

pub fn linearity(s1: &FloatSeries, s2: &FloatSeries, c1: f64, c2: f64, alpha: FracExponent) -> Result<(), TestCaseError> {
    let combo = s1.scale(&c1).add(&s2.scale(&c2)).map_err(fail)?;
    let lhs = combo.frac_integrate(alpha).map_err(fail)?;
    let rhs = s1
        .frac_integrate(alpha)
        .map_err(fail)?
        .scale(&c1)
        .add(&s2.frac_integrate(alpha).map_err(fail)?.scale(&c2))
        .map_err(fail)?;
    ensure(close(&lhs, &rhs, 1e-12)?, || format!("J^{alpha} is not linear"))
}

pub fn inverse_pair(s: &FloatSeries, alpha: FracExponent) -> Result<(), TestCaseError> {
    let back = s.frac_integrate(alpha).and_then(|x| x.caputo_derivative(alpha)).map_err(fail)?;
    ensure(close(&back, s, 1e-12)?, || format!("D^{alpha} J^{alpha} is not the identity"))
}

pub fn eval_homomorphism(a: &FloatSeries, b: &FloatSeries, x: f64, t: f64) -> Result<(), TestCaseError> {
    let ev = |s: &FloatSeries| s.eval(x, t).map_err(fail);
    let (va, vb) = (ev(a)?, ev(b)?);
    let sum = ev(&a.add(b).map_err(fail)?)?;
    let prod = ev(&a.mul(b).map_err(fail)?)?;
    let scale = 1.0 + va.abs() * vb.abs() + va.abs() + vb.abs();
    ensure((sum - (va + vb)).abs() <= 1e-12 * scale, || format!("sum: {sum} vs {}", va + vb))?;
    ensure((prod - va * vb).abs() <= 1e-12 * scale, || format!("product: {prod} vs {}", va * vb))
}

pub fn exp_rational_checks(a: &ExpTerms, b: &ExpTerms, x: f64) -> Result<(), TestCaseError> {
    let sigma = ratio(1, 2);
    let build = |m: &ExpTerms| -> Result<ExpRationalSum<f64>, TestCaseError> {
        let mut s = ExpRationalSum::zero(sigma).map_err(fail)?;
        for (&(j, q), &c) in m {
            s.add_assign(&ExpRationalSum::term(sigma, j, q, c).map_err(fail)?).map_err(fail)?;
        }
        Ok(s)
    };
    let (ea, eb) = (build(a)?, build(b)?);
    let (va, vb) = (exp_terms_eval(a, 0.5, x), exp_terms_eval(b, 0.5, x));
    let prod = ea.mul(&eb).map_err(fail)?.eval(x).map_err(fail)?;
    let scale = 1.0 + va.abs() * vb.abs();
    ensure((prod - va * vb).abs() <= 1e-12 * scale, || format!("product: {prod} vs {}", va * vb))?;
    let d_lib = ea.diff(2).map_err(fail)?.eval(x).map_err(fail)?;
    let d_oracle = exp_terms_eval(&exp_terms_diff(&exp_terms_diff(a, 0.5), 0.5), 0.5, x);
    ensure((d_lib - d_oracle).abs() <= 1e-12 * (1.0 + d_oracle.abs()), || {
        format!("second derivative: {d_lib} vs {d_oracle}")
    })
}
