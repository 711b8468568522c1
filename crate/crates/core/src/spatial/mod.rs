//! Coefficient algebras for the x-dependence of series terms.
//!
//! Every algebra implements [`Coefficient`]: addition, scaling, products,
//! x-derivatives, point evaluation, canonical form, and size reporting.
//! Mixing two algebras is a type error; mixing incompatible instances of the
//! same algebra (different exponential scale, different grid) is a runtime
//! [`Error::BackendMismatch`](crate::Error::BackendMismatch).

mod exp_rational;
mod grid;
mod power;
mod symbolic;
pub mod stencil;

pub use exp_rational::ExpRationalSum;
pub use grid::{Grid, GridFn};
pub use power::PowerSum;
pub use symbolic::Symbolic;

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::scalar::Scalar;

/// Shared contract of the spatial coefficient algebras.
pub trait Coefficient: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Scalar: Scalar;

    /// Short backend name used in diagnostics.
    const BACKEND: &'static str;

    fn is_zero(&self) -> bool;

    /// Number of stored basis terms (1 for a sampled grid function).
    fn term_count(&self) -> usize;

    fn add_assign(&mut self, other: &Self) -> Result<()>;

    fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    fn scale(&self, factor: &Self::Scalar) -> Self;

    fn neg(&self) -> Self {
        self.scale(&Self::Scalar::from_integer(-1))
    }

    fn mul(&self, other: &Self) -> Result<Self>;

    /// Integer-order x-derivative.
    fn diff(&self, order: u32) -> Result<Self>;

    /// Caputo x-derivative of order `beta` in (0, 1].
    fn caputo_diff(&self, _beta: FracExponent) -> Result<Self> {
        Err(Error::UnsupportedBackend {
            backend: Self::BACKEND,
            operation: "Caputo x-derivatives",
        })
    }

    fn eval(&self, x: f64) -> Result<f64>;

    /// Merges like terms and drops zero coefficients.
    fn canonicalize(&mut self);

    /// Approximate memory footprint in bytes.
    fn footprint(&self) -> usize;

    /// Largest |value| over a uniform 65-point sample of `[lo, hi]`.
    fn sup_norm_estimate(&self, lo: f64, hi: f64) -> Result<f64> {
        let mut best: f64 = 0.0;
        for i in 0..=64 {
            let x = lo + (hi - lo) * i as f64 / 64.0;
            best = best.max(self.eval(x)?.abs());
        }
        Ok(best)
    }
}
