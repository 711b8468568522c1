//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use std::collections::BTreeMap;

use num_rational::Rational64;

use fraciter::bench::catalog::{case1, case2, case3, case4, case5, Convention};
use fraciter::iltm::{residual, ProblemSpec};
use fraciter::{Coefficient, ExpRationalSum, FracExponent, PowerSum, Scalar, SeriesConfig, Symbolic, TimeSeries};

pub fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

pub fn fe(n: i64, d: i64) -> FracExponent {
    FracExponent::new(n, d).unwrap()
}

/// Ratio of the larger to the smaller magnitude.
pub fn factor(a: f64, b: f64) -> f64 {
    let (a, b) = (a.abs(), b.abs());
    a.max(b) / a.min(b)
}

/// Tolerance rule for printed error cells: printed values of at least
/// 1e-13 must agree within `max_factor`; smaller ones only need to stay
/// below 1e-12.
pub fn cell_matches(computed: f64, printed: f64, max_factor: f64) -> bool {
    if printed >= 1e-13 {
        computed > 0.0 && factor(computed, printed) <= max_factor
    } else {
        computed <= 1e-12
    }
}

/// erf by its Maclaurin series, accurate to double precision for |z| < 1.
pub fn erf(z: f64) -> f64 {
    let mut term = z;
    let mut sum = z;
    for n in 1..80 {
        term *= -z * z / n as f64;
        sum += term / (2 * n + 1) as f64;
    }
    sum * 2.0 / std::f64::consts::PI.sqrt()
}

/// E_{1/2}(z) = e^{z²} (1 + erf z).
pub fn mittag_leffler_half(z: f64) -> f64 {
    (z * z).exp() * (1.0 + erf(z))
}

/// Exp-rational terms c·e^{jσx}(1+e^{σx})^{−q} keyed by (j, q).
pub type ExpTerms = BTreeMap<(i64, u32), f64>;

/// d/dx by the rule jσ·(j,q) − qσ·(j+1,q+1).
pub fn exp_terms_diff(terms: &ExpTerms, sigma: f64) -> ExpTerms {
    let mut out = ExpTerms::new();
    for (&(j, q), &c) in terms {
        if j != 0 {
            *out.entry((j, q)).or_insert(0.0) += j as f64 * sigma * c;
        }
        if q != 0 {
            *out.entry((j + 1, q + 1)).or_insert(0.0) -= q as f64 * sigma * c;
        }
    }
    out.retain(|_, c| *c != 0.0);
    out
}

pub fn exp_terms_eval(terms: &ExpTerms, sigma: f64, x: f64) -> f64 {
    let e = (sigma * x).exp();
    terms
        .iter()
        .map(|(&(j, q), &c)| c * (j as f64 * sigma * x).exp() / (1.0 + e).powi(q as i32))
        .sum()
}

fn to_exp_sum(terms: &ExpTerms, sigma: Rational64) -> ExpRationalSum<f64> {
    let mut out = ExpRationalSum::zero(sigma).unwrap();
    for (&(j, q), &c) in terms {
        out.add_assign(&ExpRationalSum::term(sigma, j, q, c).unwrap()).unwrap();
    }
    out
}

/// Taylor series in t of a travelling wave u(x, t) = g(x + v t) through
/// degree `n`: coefficient i is v^i/i! · ∂_x^i u(x, 0).
pub fn travelling_wave_series(initial: &ExpTerms, sigma: Rational64, speed: f64, n: usize) -> TimeSeries<ExpRationalSum<f64>> {
    let sf = *sigma.numer() as f64 / *sigma.denom() as f64;
    let cfg = SeriesConfig::unbounded();
    let mut series = TimeSeries::zero(cfg);
    let mut deriv = initial.clone();
    let mut scale = 1.0;
    for i in 0..=n {
        if i > 0 {
            deriv = exp_terms_diff(&deriv, sf);
            scale *= speed / i as f64;
        }
        let c = to_exp_sum(&deriv, sigma).scale(&scale);
        series
            .add_assign(&TimeSeries::monomial(FracExponent::integer(i as u32), c, cfg).unwrap())
            .unwrap();
    }
    series
}

/// Truncated Taylor expansions of the five closed-form solutions, with the
/// matching problem, for residual checks.
pub enum ExactSeries {
    Power(ProblemSpec<PowerSum<f64>>, TimeSeries<PowerSum<f64>>),
    Exp(ProblemSpec<ExpRationalSum<f64>>, TimeSeries<ExpRationalSum<f64>>),
}

impl ExactSeries {
    pub fn residuals(&self, points: &[(f64, f64)]) -> Vec<f64> {
        match self {
            ExactSeries::Power(p, u) => residual(p, u, points).unwrap(),
            ExactSeries::Exp(p, u) => residual(p, u, points).unwrap(),
        }
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        match self {
            ExactSeries::Power(_, u) => u.eval(x, t).unwrap(),
            ExactSeries::Exp(_, u) => u.eval(x, t).unwrap(),
        }
    }
}

pub const WAVE_C: Rational64 = Rational64::new_raw(1, 10);

pub fn exact_series(case: u8, degree: usize) -> ExactSeries {
    let cfg = SeriesConfig::unbounded();
    let one = FracExponent::ONE;
    match case {
        1 => {
            let p = case1::<f64>(one, Convention::Consistent, cfg).unwrap();
            let u = TimeSeries::monomial(one, PowerSum::monomial(one, 1.0), cfg).unwrap();
            ExactSeries::Power(p, u)
        }
        2 => {
            let p = case2::<f64>(one, Convention::Consistent, cfg).unwrap();
            let init = ExpTerms::from([((-1, 0), 1.0)]);
            // e^{t−x} moves left with unit speed
            ExactSeries::Exp(p, travelling_wave_series(&init, ratio(1, 1), -1.0, degree))
        }
        3 => {
            let p = case3::<f64>(one, cfg).unwrap();
            let init = ExpTerms::from([((0, 2), 1.0)]);
            ExactSeries::Exp(p, travelling_wave_series(&init, ratio(1, 1), -5.0, degree))
        }
        4 => {
            let p = case4::<f64>(FracExponent::integer(2), one, Convention::Consistent, cfg).unwrap();
            // x² (1 + t)^{−2} = x² Σ (n + 1)(−t)^n
            let mut u = TimeSeries::zero(cfg);
            for n in 0..=degree {
                let c = (n as f64 + 1.0) * if n % 2 == 0 { 1.0 } else { -1.0 };
                let coeff = PowerSum::monomial(FracExponent::integer(2), c);
                u.add_assign(&TimeSeries::monomial(FracExponent::integer(n as u32), coeff, cfg).unwrap())
                    .unwrap();
            }
            ExactSeries::Power(p, u)
        }
        _ => {
            let c = WAVE_C;
            let p = case5::<f64>(one, c, cfg).unwrap();
            let cf = *c.numer() as f64 / *c.denom() as f64;
            let init = ExpTerms::from([((1, 2), -2.0 * cf * cf)]);
            // u depends on c x − c³ t, so its x-speed is −c²
            ExactSeries::Exp(p, travelling_wave_series(&init, c, -cf * cf, degree))
        }
    }
}

/// Parses the printed decomposition listing, e.g. `2u_{0}u_{2} + u_{1}^2`
/// or `u_{3}(2u_{0} + 2u_{1} + u_{3})`, into a symbolic polynomial.
pub fn parse_listing(src: &str) -> Symbolic {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let out = parse_sum(&chars, &mut pos);
    assert_eq!(pos, chars.len(), "trailing input in {src}");
    out
}

fn parse_sum(c: &[char], pos: &mut usize) -> Symbolic {
    let mut acc = parse_product(c, pos);
    while *pos < c.len() && (c[*pos] == '+' || c[*pos] == '-') {
        let neg = c[*pos] == '-';
        *pos += 1;
        let term = parse_product(c, pos);
        acc = acc.add(&if neg { term.neg() } else { term }).unwrap();
    }
    acc
}

fn parse_product(c: &[char], pos: &mut usize) -> Symbolic {
    let mut acc = Symbolic::constant(Scalar::one());
    let mut any = false;
    while *pos < c.len() {
        let factor = match c[*pos] {
            '0'..='9' => {
                let start = *pos;
                while *pos < c.len() && c[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                let n: i64 = c[start..*pos].iter().collect::<String>().parse().unwrap();
                Symbolic::constant(Scalar::from_ratio(Rational64::from_integer(n)))
            }
            'u' => {
                *pos += 1;
                assert_eq!(c[*pos], '_');
                *pos += 1;
                let braced = c[*pos] == '{';
                if braced {
                    *pos += 1;
                }
                let start = *pos;
                while c[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                let i: u32 = c[start..*pos].iter().collect::<String>().parse().unwrap();
                if braced {
                    assert_eq!(c[*pos], '}');
                    *pos += 1;
                }
                Symbolic::symbol(i)
            }
            '(' => {
                *pos += 1;
                let inner = parse_sum(c, pos);
                assert_eq!(c[*pos], ')');
                *pos += 1;
                inner
            }
            _ => break,
        };
        let factor = if *pos < c.len() && c[*pos] == '^' {
            *pos += 1;
            let start = *pos;
            while *pos < c.len() && c[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let e: u32 = c[start..*pos].iter().collect::<String>().parse().unwrap();
            let mut p = factor.clone();
            for _ in 1..e {
                p = p.mul(&factor).unwrap();
            }
            p
        } else {
            factor
        };
        acc = acc.mul(&factor).unwrap();
        any = true;
    }
    assert!(any, "empty product at {pos}");
    acc
}

/// Symbolic iterates u_0 … u_n as constant-in-t series.
pub fn symbolic_iterates(n: usize) -> Vec<TimeSeries<Symbolic>> {
    (0..=n)
        .map(|i| TimeSeries::monomial(FracExponent::ZERO, Symbolic::symbol(i as u32), SeriesConfig::default()).unwrap())
        .collect()
}

/// Multiplies two power sums term by term into a fresh map.
pub fn brute_force_product(a: &[(FracExponent, f64)], b: &[(FracExponent, f64)]) -> BTreeMap<FracExponent, f64> {
    let mut out = BTreeMap::new();
    for &(ea, ca) in a {
        for &(eb, cb) in b {
            *out.entry(ea + eb).or_insert(0.0) += ca * cb;
        }
    }
    out
}
