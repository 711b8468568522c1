use thiserror::Error;

use crate::exponent::FracExponent;
use crate::nonlinear::DecompositionKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma has a pole at {0}")]
    GammaPole(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series did not converge within {max_terms} terms (argument {argument})")]
    NonConvergence { argument: f64, max_terms: usize },

    #[error("argument {argument} is outside the convergence budget |t| <= {budget}")]
    OutsideBudget { argument: f64, budget: f64 },

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("{backend} does not support derivative order {order}")]
    UnsupportedOrder { backend: &'static str, order: u32 },

    #[error("{backend} does not support {operation}")]
    UnsupportedBackend {
        backend: &'static str,
        operation: &'static str,
    },

    #[error("exponent {exponent} is below the derivative order {order}")]
    ExponentBelowOrder {
        exponent: FracExponent,
        order: FracExponent,
    },

    #[error("time exponent {exponent} lies strictly between 0 and the Caputo order {order}")]
    UnsupportedExponent {
        exponent: FracExponent,
        order: FracExponent,
    },

    #[error("x = {x} is outside the domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    #[error("t = {0} is negative")]
    NegativeTime(f64),

    #[error("series has {terms} terms, exceeding the cap of {cap} (output length limit)")]
    TermCapExceeded { terms: usize, cap: usize },

    #[error("exact coefficients need an integral Gamma shift, got Gamma({numerator})/Gamma({denominator})")]
    InexactCoefficient {
        numerator: FracExponent,
        denominator: FracExponent,
    },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("combinatorial budget exceeded: {terms} expanded terms (limit {limit})")]
    CombinatorialBudget { terms: usize, limit: usize },

    #[error("index {index} out of range (length {len})")]
    Index { index: usize, len: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("no exact solution available for {case} at alpha = {alpha}")]
    NoExactSolution { case: String, alpha: FracExponent },

    #[error("{problem}, {kind} decomposition, iteration {iteration}: {source}")]
    Iteration {
        problem: String,
        kind: DecompositionKind,
        iteration: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("missing {kind} report for {case}")]
    MissingPair { case: String, kind: DecompositionKind },
}

impl Error {
    /// Strips iteration context, returning the underlying failure.
    pub fn root(&self) -> &Error {
        match self {
            Error::Iteration { source, .. } => source.root(),
            other => other,
        }
    }

    /// Iteration index attached by the solver, if any.
    pub fn iteration(&self) -> Option<usize> {
        match self {
            Error::Iteration { iteration, .. } => Some(*iteration),
            _ => None,
        }
    }
}
