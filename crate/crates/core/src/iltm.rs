//! The iterative Laplace transform recursion.
//!
//! ```text
//! u_0     = Σ_{k<m} t_k(x) t^k / k! + J^α f
//! u_{k+1} = J^α (R u_k + P_k)
//! ```
//!
//! where `P_k` is the He or Daftardar-Jafari polynomial of the nonlinear
//! part. Table column `k` of the benchmarks corresponds to
//! [`IterationRun::partial_sum`]`(k)`.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::fracseries::{SeriesConfig, TimeSeries};
use crate::metrics;
use crate::nonlinear::{apply_operator, hes_polynomial, DecompositionKind, DjState, Rhs};
use crate::scalar::Scalar;
use crate::spatial::Coefficient;

pub type ExactFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Closed-form solution valid only at specific orders.
#[derive(Clone)]
pub struct ExactSolution {
    f: ExactFn,
    alpha: FracExponent,
    beta: Option<FracExponent>,
}

impl ExactSolution {
    pub fn new(alpha: FracExponent, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        ExactSolution {
            f: Arc::new(f),
            alpha,
            beta: None,
        }
    }

    pub fn with_beta(mut self, beta: FracExponent) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        (self.f)(x, t)
    }

    pub fn is_valid_for(&self, alpha: FracExponent, beta: Option<FracExponent>) -> bool {
        alpha == self.alpha && (self.beta.is_none() || self.beta == beta)
    }
}

impl fmt::Debug for ExactSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactSolution")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish_non_exhaustive()
    }
}

/// A fractional PDE D_t^α u = R u + N u + f with initial data.
#[derive(Clone, Debug)]
pub struct ProblemSpec<C: Coefficient> {
    name: String,
    alpha: FracExponent,
    beta: Option<FracExponent>,
    initial_data: Vec<C>,
    source: TimeSeries<C>,
    rhs: Rhs,
    exact: Option<ExactSolution>,
    config: SeriesConfig,
}

impl<C: Coefficient> ProblemSpec<C> {
    /// `initial_data[k]` is ∂_t^k u(x, 0); exactly ⌈α⌉ entries are required.
    pub fn new(
        name: impl Into<String>,
        alpha: FracExponent,
        initial_data: Vec<C>,
        rhs: Rhs,
        config: SeriesConfig,
    ) -> Result<Self> {
        let name = name.into();
        if alpha.is_zero() || alpha > FracExponent::integer(2) {
            return Err(Error::InvalidProblem(format!(
                "{name}: alpha = {alpha} is outside (0, 2]"
            )));
        }
        let m = alpha.ceil() as usize;
        if initial_data.len() != m {
            return Err(Error::InvalidProblem(format!(
                "{name}: alpha = {alpha} needs {m} initial conditions, got {}",
                initial_data.len()
            )));
        }
        Ok(ProblemSpec {
            name,
            alpha,
            beta: None,
            initial_data,
            source: TimeSeries::zero(config),
            rhs,
            exact: None,
            config,
        })
    }

    pub fn with_source(mut self, source: TimeSeries<C>) -> Self {
        self.source = source.with_config(self.config);
        self
    }

    pub fn with_beta(mut self, beta: FracExponent) -> Result<Self> {
        if beta.is_zero() || beta > FracExponent::ONE {
            return Err(Error::InvalidProblem(format!(
                "{}: beta = {beta} is outside (0, 1]",
                self.name
            )));
        }
        self.beta = Some(beta);
        Ok(self)
    }

    pub fn with_exact(mut self, exact: ExactSolution) -> Self {
        self.exact = Some(exact);
        self
    }

    pub fn with_config(mut self, config: SeriesConfig) -> Self {
        self.config = config;
        self.source = self.source.with_config(config);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alpha(&self) -> FracExponent {
        self.alpha
    }

    pub fn beta(&self) -> Option<FracExponent> {
        self.beta
    }

    /// Number of initial conditions, ⌈α⌉.
    pub fn m(&self) -> usize {
        self.alpha.ceil() as usize
    }

    pub fn initial_data(&self) -> &[C] {
        &self.initial_data
    }

    pub fn source(&self) -> &TimeSeries<C> {
        &self.source
    }

    pub fn rhs(&self) -> &Rhs {
        &self.rhs
    }

    pub fn config(&self) -> SeriesConfig {
        self.config
    }

    /// The exact solution, if one is known at this problem's orders.
    pub fn exact(&self) -> Option<&ExactSolution> {
        self.exact
            .as_ref()
            .filter(|e| e.is_valid_for(self.alpha, self.beta))
    }

    pub fn exact_any_order(&self) -> Option<&ExactSolution> {
        self.exact.as_ref()
    }
}

/// u_0 = Σ_{k<m} t_k(x) t^k / k! + J^α f.
pub fn build_theta<C: Coefficient>(p: &ProblemSpec<C>) -> Result<TimeSeries<C>> {
    let mut theta = TimeSeries::zero(p.config);
    let mut factorial: i64 = 1;
    for (k, tk) in p.initial_data.iter().enumerate() {
        if k > 0 {
            factorial *= k as i64;
        }
        let c = tk.scale(&C::Scalar::from_ratio(Rational64::new(1, factorial)));
        theta.add_assign(&TimeSeries::monomial(FracExponent::integer(k as u32), c, p.config)?)?;
    }
    if !p.source.is_zero() {
        theta.add_assign(&p.source.frac_integrate(p.alpha)?)?;
    }
    Ok(theta)
}

/// Per-iterate cost counters.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IterationStat {
    pub wall_seconds: f64,
    /// Distinct `t` exponents in the iterate.
    pub term_count: usize,
    /// Spatial basis terms summed over all exponents.
    pub coefficient_term_count: usize,
    /// Coefficient products performed while producing the iterate.
    pub multiplication_count: u64,
    /// Estimated bytes held by the iterate.
    pub bytes: usize,
}

#[derive(Clone, Debug)]
pub struct IterationRun<C: Coefficient> {
    problem: String,
    kind: DecompositionKind,
    iterates: Vec<TimeSeries<C>>,
    stats: Vec<IterationStat>,
}

impl<C: Coefficient> IterationRun<C> {
    pub fn problem(&self) -> &str {
        &self.problem
    }

    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    pub fn iterates(&self) -> &[TimeSeries<C>] {
        &self.iterates
    }

    pub fn stats(&self) -> &[IterationStat] {
        &self.stats
    }

    pub fn len(&self) -> usize {
        self.iterates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterates.is_empty()
    }

    /// u_0 + … + u_k.
    pub fn partial_sum(&self, k: usize) -> Result<TimeSeries<C>> {
        if k >= self.iterates.len() {
            return Err(Error::Index {
                index: k,
                len: self.iterates.len(),
            });
        }
        let mut s = self.iterates[0].clone();
        for u in &self.iterates[1..=k] {
            s.add_assign(u)?;
        }
        Ok(s)
    }

    /// All partial sums, index `k` holding u_0 + … + u_k.
    pub fn partial_sums(&self) -> Result<Vec<TimeSeries<C>>> {
        let mut out: Vec<TimeSeries<C>> = Vec::with_capacity(self.iterates.len());
        for u in &self.iterates {
            let next = match out.last() {
                Some(s) => s.add(u)?,
                None => u.clone(),
            };
            out.push(next);
        }
        Ok(out)
    }
}

/// A run that may have stopped early; `run` holds every iterate completed
/// before the failure.
#[derive(Clone, Debug)]
pub struct RunOutcome<C: Coefficient> {
    pub run: IterationRun<C>,
    pub error: Option<Error>,
}

impl<C: Coefficient> RunOutcome<C> {
    pub fn into_result(self) -> Result<IterationRun<C>> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.run),
        }
    }
}

/// Runs the recursion to `k_max` iterations.
pub fn run_iltm<C: Coefficient>(
    p: &ProblemSpec<C>,
    kind: DecompositionKind,
    k_max: usize,
) -> Result<IterationRun<C>> {
    run_iltm_partial(p, kind, k_max).into_result()
}

/// Like [`run_iltm`], but keeps the completed iterates when a step fails.
pub fn run_iltm_partial<C: Coefficient>(
    p: &ProblemSpec<C>,
    kind: DecompositionKind,
    k_max: usize,
) -> RunOutcome<C> {
    let mut run = IterationRun {
        problem: p.name.clone(),
        kind,
        iterates: Vec::with_capacity(k_max + 1),
        stats: Vec::with_capacity(k_max + 1),
    };
    let wrap = |iteration: usize, e: Error| Error::Iteration {
        problem: p.name.clone(),
        kind,
        iteration,
        source: Box::new(e),
    };

    let clock = Instant::now();
    let before = metrics::snapshot();
    match build_theta(p) {
        Ok(theta) => {
            run.stats.push(stat(&theta, clock, before));
            run.iterates.push(theta);
        }
        Err(e) => {
            return RunOutcome {
                run,
                error: Some(wrap(0, e)),
            }
        }
    }

    let mut dj = DjState::default();
    for k in 0..k_max {
        let clock = Instant::now();
        let before = metrics::snapshot();
        let mut step = || -> Result<TimeSeries<C>> {
            let polynomial = match kind {
                DecompositionKind::Hes => hes_polynomial(p.rhs.nonlinear(), &run.iterates, k)?,
                DecompositionKind::DJ => dj.next(p.rhs.nonlinear(), &run.iterates)?,
            };
            let mut rhs = polynomial;
            if let Some(r) = p.rhs.linear() {
                rhs.add_assign(&apply_operator(r, &run.iterates[k])?)?;
            }
            rhs.frac_integrate(p.alpha)
        };
        match step() {
            Ok(next) => {
                run.stats.push(stat(&next, clock, before));
                run.iterates.push(next);
            }
            Err(e) => {
                return RunOutcome {
                    run,
                    error: Some(wrap(k + 1, e)),
                }
            }
        }
    }
    RunOutcome { run, error: None }
}

fn stat<C: Coefficient>(u: &TimeSeries<C>, clock: Instant, before: metrics::Snapshot) -> IterationStat {
    IterationStat {
        wall_seconds: clock.elapsed().as_secs_f64(),
        term_count: u.len(),
        coefficient_term_count: u.term_count(),
        multiplication_count: metrics::snapshot().multiplications_since(&before),
        bytes: u.footprint(),
    }
}

/// |D_t^α u − (R u + N u + f)| at each `(x, t)`.
pub fn residual<C: Coefficient>(
    p: &ProblemSpec<C>,
    u: &TimeSeries<C>,
    points: &[(f64, f64)],
) -> Result<Vec<f64>> {
    let lhs = u.caputo_derivative(p.alpha)?;
    let mut rhs = apply_operator(p.rhs.nonlinear(), u)?;
    if let Some(r) = p.rhs.linear() {
        rhs.add_assign(&apply_operator(r, u)?)?;
    }
    rhs.add_assign(&p.source)?;
    let diff = lhs.sub(&rhs)?;
    points
        .iter()
        .map(|&(x, t)| diff.eval(x, t).map(f64::abs))
        .collect()
}
