//! The five benchmark problems.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::fracseries::{SeriesConfig, TimeSeries};
use crate::iltm::{ExactSolution, ProblemSpec};
use crate::nonlinear::{OperatorExpr, Rhs};
use crate::scalar::{Exact, Scalar};
use crate::spatial::{ExpRationalSum, PowerSum};

use super::dynamic::AnyProblem;
use super::reference;

pub const CASE_IDS: [u8; 5] = [1, 2, 3, 4, 5];

/// Which reading of the printed problem statements to use.
///
/// `Consistent` adjusts signs and initial data so the stated closed forms
/// solve the equations. `AsPrinted` keeps the statements verbatim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    Consistent,
    AsPrinted,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Consistent => "consistent",
            Convention::AsPrinted => "as-printed",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "consistent" => Ok(Convention::Consistent),
            "as-printed" | "printed" => Ok(Convention::AsPrinted),
            other => Err(Error::InvalidParameter(format!(
                "unknown convention '{other}', expected 'consistent' or 'as-printed'"
            ))),
        }
    }
}

/// Overrides for the catalog defaults.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CaseOptions {
    pub alpha: Option<FracExponent>,
    /// Spatial Caputo order, case 4 only.
    pub beta: Option<FracExponent>,
    /// Wave parameter, case 5 only.
    pub c: Option<Rational64>,
    pub convention: Convention,
    pub config: SeriesConfig,
    /// Use f64 coefficients even at integral orders.
    pub force_float: bool,
}

impl CaseOptions {
    pub fn with_alpha(mut self, alpha: FracExponent) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_config(mut self, config: SeriesConfig) -> Self {
        self.config = config;
        self
    }
}

/// A benchmark problem with its evaluation grid.
#[derive(Clone, Debug)]
pub struct BenchmarkCase {
    pub id: u8,
    pub title: &'static str,
    pub problem: AnyProblem,
    /// Evaluation points as (t, x).
    pub grid: Vec<(f64, f64)>,
    /// Iterations shown in the error table.
    pub k_max: usize,
}

impl BenchmarkCase {
    pub fn name(&self) -> String {
        format!("case{}", self.id)
    }

    /// Equation in operator form.
    pub fn describe(&self) -> String {
        let source = if self.id == 1 { " + f" } else { "" };
        let mut s = format!("D_t^{} u = R u + N u{source}; {}", self.problem.alpha(), self.problem.rhs());
        if self.id == 1 {
            s.push_str("; f = x + x*t^2");
        }
        s
    }
}

pub const DEFAULT_C: Rational64 = Rational64::new_raw(1, 10);

fn title(id: u8) -> &'static str {
    match id {
        1 => "nonlinear advection",
        2 => "nonlinear reaction-advection",
        3 => "Fisher equation",
        4 => "nonlinear fractional diffusion",
        _ => "Korteweg-de Vries soliton",
    }
}

fn square_grid() -> Vec<(f64, f64)> {
    reference::CASE1_ERRORS.iter().map(|r| (r[0], r[1])).collect()
}

fn grid(id: u8) -> Vec<(f64, f64)> {
    match id {
        1 | 2 | 4 => square_grid(),
        3 => reference::CASE3_ERRORS.iter().map(|r| (r[0], r[1])).collect(),
        // the printed labels on this table are interchanged
        _ => reference::CASE5_ERRORS.iter().map(|r| (r[1], r[0])).collect(),
    }
}

fn default_k(id: u8) -> usize {
    match id {
        2 => 6,
        5 => 4,
        _ => 5,
    }
}

fn default_alpha(id: u8) -> FracExponent {
    if id == 4 {
        FracExponent::integer(2)
    } else {
        FracExponent::ONE
    }
}

/// Builds benchmark case `id` (1 to 5).
pub fn case(id: u8, opts: &CaseOptions) -> Result<BenchmarkCase> {
    if !CASE_IDS.contains(&id) {
        return Err(Error::InvalidParameter(format!("unknown case {id}, expected 1 to 5")));
    }
    let alpha = opts.alpha.unwrap_or_else(|| default_alpha(id));
    let (lo, hi) = if id == 4 {
        (FracExponent::ONE, FracExponent::integer(2))
    } else {
        (FracExponent::ZERO, FracExponent::ONE)
    };
    if alpha <= lo || alpha > hi {
        return Err(Error::InvalidParameter(format!(
            "case {id} needs alpha in ({lo}, {hi}], got {alpha}"
        )));
    }
    if opts.beta.is_some() && id != 4 {
        return Err(Error::InvalidParameter(format!("beta applies to case 4 only, not case {id}")));
    }
    if opts.c.is_some() && id != 5 {
        return Err(Error::InvalidParameter(format!("c applies to case 5 only, not case {id}")));
    }
    let beta = opts.beta.unwrap_or(FracExponent::ONE);
    let c = opts.c.unwrap_or(DEFAULT_C);
    if c <= Rational64::from_integer(0) {
        return Err(Error::InvalidParameter(format!("c must be positive, got {c}")));
    }
    let exact = !opts.force_float && alpha.is_integer() && beta.is_integer();
    let conv = opts.convention;
    let cfg = opts.config;
    let problem = match (id, exact) {
        (1, true) => AnyProblem::PowerExact(case1::<Exact>(alpha, conv, cfg)?),
        (1, false) => AnyProblem::PowerFloat(case1::<f64>(alpha, conv, cfg)?),
        (2, true) => AnyProblem::ExpExact(case2::<Exact>(alpha, conv, cfg)?),
        (2, false) => AnyProblem::ExpFloat(case2::<f64>(alpha, conv, cfg)?),
        (3, true) => AnyProblem::ExpExact(case3::<Exact>(alpha, cfg)?),
        (3, false) => AnyProblem::ExpFloat(case3::<f64>(alpha, cfg)?),
        (4, true) => AnyProblem::PowerExact(case4::<Exact>(alpha, beta, conv, cfg)?),
        (4, false) => AnyProblem::PowerFloat(case4::<f64>(alpha, beta, conv, cfg)?),
        (_, true) => AnyProblem::ExpExact(case5::<Exact>(alpha, c, cfg)?),
        (_, false) => AnyProblem::ExpFloat(case5::<f64>(alpha, c, cfg)?),
    };
    Ok(BenchmarkCase {
        id,
        title: title(id),
        problem,
        grid: grid(id),
        k_max: default_k(id),
    })
}

fn int<S: Scalar>(n: i64) -> S {
    S::from_ratio(Rational64::from_integer(n))
}

/// D_t^α u = ∓u u_x + x + x t², u(x, 0) = 0; exact x t at α = 1.
pub fn case1<S: Scalar>(
    alpha: FracExponent,
    conv: Convention,
    cfg: SeriesConfig,
) -> Result<ProblemSpec<PowerSum<S>>> {
    let sign = match conv {
        Convention::Consistent => -1,
        Convention::AsPrinted => 1,
    };
    let n = OperatorExpr::u().times(OperatorExpr::u().dx(1)).scaled(sign, 1);
    let x = PowerSum::monomial(FracExponent::ONE, int::<S>(1));
    let source = TimeSeries::from_terms(
        [(FracExponent::ZERO, x.clone()), (FracExponent::integer(2), x)],
        cfg,
    )?;
    Ok(ProblemSpec::new("case1", alpha, vec![PowerSum::zero()], Rhs::new(None, n)?, cfg)?
        .with_source(source)
        .with_exact(ExactSolution::new(FracExponent::ONE, |x, t| x * t)))
}

/// D_t^α u = u − u(u_x + u), u(x, 0) = e^{−x}; exact e^{t−x} at α = 1.
/// The printed reading uses u u_x − u² instead.
pub fn case2<S: Scalar>(
    alpha: FracExponent,
    conv: Convention,
    cfg: SeriesConfig,
) -> Result<ProblemSpec<ExpRationalSum<S>>> {
    let u = OperatorExpr::u;
    let n = match conv {
        Convention::Consistent => u().times(u().dx(1).plus(u())).scaled(-1, 1),
        Convention::AsPrinted => u().times(u().dx(1).plus(u().scaled(-1, 1))),
    };
    let sigma = Rational64::from_integer(1);
    let ic = ExpRationalSum::term(sigma, -1, 0, int::<S>(1))?;
    Ok(ProblemSpec::new("case2", alpha, vec![ic], Rhs::new(Some(u()), n)?, cfg)?
        .with_exact(ExactSolution::new(FracExponent::ONE, |x, t| (t - x).exp())))
}

/// D_t^α u = u_xx + 6u − 6u², u(x, 0) = (1 + e^x)^{−2};
/// exact (1 + e^{x−5t})^{−2} at α = 1.
pub fn case3<S: Scalar>(alpha: FracExponent, cfg: SeriesConfig) -> Result<ProblemSpec<ExpRationalSum<S>>> {
    let u = OperatorExpr::u;
    let r = u().dx(2).plus(u().scaled(6, 1));
    let n = u().pow(2).scaled(-6, 1);
    let sigma = Rational64::from_integer(1);
    let ic = ExpRationalSum::term(sigma, 0, 2, int::<S>(1))?;
    Ok(ProblemSpec::new("case3", alpha, vec![ic], Rhs::new(Some(r), n)?, cfg)?.with_exact(
        ExactSolution::new(FracExponent::ONE, |x, t| (1.0 + (x - 5.0 * t).exp()).powi(-2)),
    ))
}

/// D_t^α u = ∂_x(u D_x^β u), u(x, 0) = x^{2β}, u_t(x, 0) = −2x^{2β};
/// exact x²/(1 + t)² at α = 2, β = 1. The printed reading has
/// u_t(x, 0) = −x^{2β}.
pub fn case4<S: Scalar>(
    alpha: FracExponent,
    beta: FracExponent,
    conv: Convention,
    cfg: SeriesConfig,
) -> Result<ProblemSpec<PowerSum<S>>> {
    let u = OperatorExpr::u;
    let n = u().times(u().dx_caputo(beta)).dx(1);
    let two_beta = beta + beta;
    let slope = match conv {
        Convention::Consistent => -2,
        Convention::AsPrinted => -1,
    };
    let ics = vec![
        PowerSum::monomial(two_beta, int::<S>(1)),
        PowerSum::monomial(two_beta, int::<S>(slope)),
    ];
    ProblemSpec::new("case4", alpha, ics, Rhs::new(None, n)?, cfg)?
        .with_beta(beta)
        .map(|p| {
            p.with_exact(
                ExactSolution::new(FracExponent::integer(2), |x, t| (x / (1.0 + t)).powi(2))
                    .with_beta(FracExponent::ONE),
            )
        })
}

/// D_t^α u = −u_xxx + 6u u_x, u(x, 0) = −2c² e^{cx}(1 + e^{cx})^{−2};
/// exact −(c²/2) sech²((cx − c³t)/2) at α = 1.
pub fn case5<S: Scalar>(
    alpha: FracExponent,
    c: Rational64,
    cfg: SeriesConfig,
) -> Result<ProblemSpec<ExpRationalSum<S>>> {
    let u = OperatorExpr::u;
    let r = u().dx(3).scaled(-1, 1);
    let n = u().times(u().dx(1)).scaled(6, 1);
    let ic = ExpRationalSum::term(c, 1, 2, S::from_ratio(-Rational64::from_integer(2) * c * c))?;
    let cf = *c.numer() as f64 / *c.denom() as f64;
    Ok(ProblemSpec::new("case5", alpha, vec![ic], Rhs::new(Some(r), n)?, cfg)?.with_exact(
        ExactSolution::new(FracExponent::ONE, move |x, t| {
            let e = (cf * x - cf.powi(3) * t).exp();
            -2.0 * cf * cf * e / (1.0 + e).powi(2)
        }),
    ))
}
