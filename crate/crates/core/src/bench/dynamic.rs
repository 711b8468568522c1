//! Backend-erased problems and runs, so callers can pick the coefficient
//! algebra and scalar field at runtime.

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::fracseries::TimeSeries;
use crate::iltm::{self, ExactSolution, IterationRun, IterationStat, ProblemSpec};
use crate::nonlinear::{DecompositionKind, Rhs};
use crate::scalar::Exact;
use crate::spatial::{Coefficient, ExpRationalSum, PowerSum};

/// A problem in one of the supported backend and scalar combinations.
#[derive(Clone, Debug)]
pub enum AnyProblem {
    PowerExact(ProblemSpec<PowerSum<Exact>>),
    PowerFloat(ProblemSpec<PowerSum<f64>>),
    ExpExact(ProblemSpec<ExpRationalSum<Exact>>),
    ExpFloat(ProblemSpec<ExpRationalSum<f64>>),
}

macro_rules! dispatch {
    ($value:expr, $p:ident => $body:expr) => {
        match $value {
            AnyProblem::PowerExact($p) => $body,
            AnyProblem::PowerFloat($p) => $body,
            AnyProblem::ExpExact($p) => $body,
            AnyProblem::ExpFloat($p) => $body,
        }
    };
}

/// Result of [`AnyProblem::run`]: completed iterates plus the failure, if any.
pub struct AnyOutcome {
    pub run: Box<dyn SolvedRun>,
    pub error: Option<Error>,
}

impl AnyOutcome {
    pub fn into_result(self) -> Result<Box<dyn SolvedRun>> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.run),
        }
    }
}

impl AnyProblem {
    pub fn name(&self) -> &str {
        dispatch!(self, p => p.name())
    }

    pub fn alpha(&self) -> FracExponent {
        dispatch!(self, p => p.alpha())
    }

    pub fn beta(&self) -> Option<FracExponent> {
        dispatch!(self, p => p.beta())
    }

    pub fn rhs(&self) -> &Rhs {
        dispatch!(self, p => p.rhs())
    }

    /// Exact solution when valid at the problem's orders.
    pub fn exact(&self) -> Option<&ExactSolution> {
        dispatch!(self, p => p.exact())
    }

    /// Backend and scalar field, e.g. `power-sum/exact`.
    pub fn backend(&self) -> &'static str {
        match self {
            AnyProblem::PowerExact(_) => "power-sum/exact",
            AnyProblem::PowerFloat(_) => "power-sum/f64",
            AnyProblem::ExpExact(_) => "exp-rational/exact",
            AnyProblem::ExpFloat(_) => "exp-rational/f64",
        }
    }

    pub fn run(&self, kind: DecompositionKind, k_max: usize) -> AnyOutcome {
        dispatch!(self, p => {
            let out = iltm::run_iltm_partial(p, kind, k_max);
            AnyOutcome {
                run: Box::new(Solved::new(out.run)),
                error: out.error,
            }
        })
    }
}

/// Read-only view of a finished run.
pub trait SolvedRun: Send + Sync {
    fn kind(&self) -> DecompositionKind;
    /// Number of iterates u_0 … u_K.
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn stats(&self) -> &[IterationStat];
    /// (u_0 + … + u_k)(x, t).
    fn eval_partial(&self, k: usize, x: f64, t: f64) -> Result<f64>;
    fn eval_iterate(&self, k: usize, x: f64, t: f64) -> Result<f64>;
    /// Canonical text of u_k.
    fn render_iterate(&self, k: usize) -> Result<String>;
    /// Spatial basis terms of every iterate.
    fn iterate_term_counts(&self) -> Vec<usize>;
}

struct Solved<C: Coefficient> {
    run: IterationRun<C>,
    sums: Vec<TimeSeries<C>>,
}

impl<C: Coefficient> Solved<C> {
    fn new(run: IterationRun<C>) -> Self {
        let sums = run.partial_sums().unwrap_or_default();
        Solved { run, sums }
    }

    fn index(&self, k: usize) -> Result<()> {
        if k >= self.sums.len() {
            return Err(Error::Index {
                index: k,
                len: self.sums.len(),
            });
        }
        Ok(())
    }
}

impl<C: Coefficient + std::fmt::Display> SolvedRun for Solved<C> {
    fn kind(&self) -> DecompositionKind {
        self.run.kind()
    }
    fn len(&self) -> usize {
        self.run.len()
    }
    fn stats(&self) -> &[IterationStat] {
        self.run.stats()
    }
    fn eval_partial(&self, k: usize, x: f64, t: f64) -> Result<f64> {
        self.index(k)?;
        self.sums[k].eval(x, t)
    }
    fn eval_iterate(&self, k: usize, x: f64, t: f64) -> Result<f64> {
        self.index(k)?;
        self.run.iterates()[k].eval(x, t)
    }
    fn render_iterate(&self, k: usize) -> Result<String> {
        self.index(k)?;
        Ok(self.run.iterates()[k].to_string())
    }
    fn iterate_term_counts(&self) -> Vec<usize> {
        self.run.iterates().iter().map(TimeSeries::term_count).collect()
    }
}
