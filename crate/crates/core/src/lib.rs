//! Iterative Laplace transform solver for nonlinear time- and
//! space-fractional PDEs of the form
//!
//! ```text
//! D_t^α u = R u + N u + f,   m − 1 < α ≤ m,
//! ```
//!
//! with the nonlinear term decomposed by He polynomials or by
//! Daftardar-Jafari polynomials.
//!
//! Iterates are truncated fractional power series in `t`
//! ([`TimeSeries`]) whose coefficients live in one of three spatial
//! algebras ([`spatial`]). The solver ([`iltm`]) runs
//! u_{k+1} = J^α(R u_k + P_k), where P_k is the chosen decomposition
//! polynomial ([`nonlinear`]).

pub mod bench;
pub mod error;
pub mod exponent;
pub mod fracseries;
pub mod iltm;
pub mod metrics;
pub mod nonlinear;
pub mod profiler;
pub mod scalar;
pub mod spatial;
pub mod special_fn;

pub use error::{Error, Result};
pub use exponent::FracExponent;
pub use fracseries::{SeriesConfig, TimeSeries};
pub use iltm::{run_iltm, ExactSolution, IterationRun, ProblemSpec};
pub use nonlinear::{DecompositionKind, OperatorExpr, Rhs};
pub use profiler::{profile, Budget, CostReport};
pub use scalar::{Exact, Scalar};
pub use spatial::{Coefficient, ExpRationalSum, Grid, GridFn, PowerSum, Symbolic};
