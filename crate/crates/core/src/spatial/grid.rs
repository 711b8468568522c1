use std::fmt;

use crate::error::{Error, Result};
use crate::metrics;

use super::stencil::fornberg_weights;
use super::Coefficient;

/// Uniform grid on `[x_lo, x_hi]` with `n` nodes and a finite-difference
/// accuracy order for derivatives.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    x_lo: f64,
    x_hi: f64,
    n: usize,
    accuracy: usize,
}

pub const MIN_GRID_POINTS: usize = 16;
pub const DEFAULT_ACCURACY: usize = 6;
const MAX_DERIVATIVE: u32 = 3;

impl Grid {
    pub fn new(x_lo: f64, x_hi: f64, n: usize) -> Result<Self> {
        Self::with_accuracy(x_lo, x_hi, n, DEFAULT_ACCURACY)
    }

    /// `accuracy` must be one of 2, 4, 6, 8.
    pub fn with_accuracy(x_lo: f64, x_hi: f64, n: usize, accuracy: usize) -> Result<Self> {
        if !(x_lo.is_finite() && x_hi.is_finite() && x_lo < x_hi) {
            return Err(Error::InvalidParameter(format!(
                "grid bounds must be finite with x_lo < x_hi, got [{x_lo}, {x_hi}]"
            )));
        }
        if n < MIN_GRID_POINTS {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least {MIN_GRID_POINTS} points, got {n}"
            )));
        }
        if !matches!(accuracy, 2 | 4 | 6 | 8) {
            return Err(Error::InvalidParameter(format!(
                "finite-difference accuracy must be 2, 4, 6 or 8, got {accuracy}"
            )));
        }
        Ok(Grid {
            x_lo,
            x_hi,
            n,
            accuracy,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.x_lo, self.x_hi)
    }

    pub fn step(&self) -> f64 {
        (self.x_hi - self.x_lo) / (self.n - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.x_hi
        } else {
            self.x_lo + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.point(i)).collect()
    }
}

/// Function sampled on a uniform [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct GridFn {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFn {
    pub fn sample(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_values(grid, grid.points().into_iter().map(f).collect())
    }

    pub fn from_values(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::InvalidParameter(format!(
                "grid has {} points but {} values were given",
                grid.n,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid values must be finite, found {v}"
            )));
        }
        Ok(GridFn { grid, values })
    }

    pub fn constant(grid: Grid, c: f64) -> Result<Self> {
        Self::from_values(grid, vec![c; grid.n])
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn check_grid(&self, other: &GridFn) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::BackendMismatch(format!(
                "grids differ: {:?} vs {:?}",
                self.grid, other.grid
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &GridFn, f: impl Fn(f64, f64) -> f64) -> Result<GridFn> {
        self.check_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(*a, *b))
            .collect();
        Ok(GridFn {
            grid: self.grid,
            values,
        })
    }
}

impl Coefficient for GridFn {
    type Scalar = f64;
    const BACKEND: &'static str = "grid";

    fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }

    fn term_count(&self) -> usize {
        1
    }

    fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_grid(other)?;
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
        Ok(())
    }

    fn scale(&self, factor: &f64) -> Self {
        GridFn {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        let out = self.zip(other, |a, b| a * b)?;
        metrics::add_multiplications(self.grid.n as u64);
        Ok(out)
    }

    /// Central differences in the interior and shifted one-sided stencils of
    /// the same width near the ends.
    fn diff(&self, order: u32) -> Result<Self> {
        if order == 0 {
            return Ok(self.clone());
        }
        if order > MAX_DERIVATIVE {
            return Err(Error::UnsupportedOrder {
                backend: Self::BACKEND,
                order,
            });
        }
        let d = order as usize;
        let n = self.grid.n;
        let h = self.grid.step();
        let mut width = self.grid.accuracy + d;
        if width % 2 == 0 {
            width += 1;
        }
        let nodes: Vec<f64> = (0..width).map(|j| j as f64).collect();
        let scale = h.powi(order as i32);
        let mut values = vec![0.0; n];
        for (i, out) in values.iter_mut().enumerate() {
            let start = i.saturating_sub(width / 2).min(n - width);
            let w = fornberg_weights((i - start) as f64, &nodes, d);
            *out = w[d]
                .iter()
                .zip(&self.values[start..start + width])
                .map(|(c, v)| c * v)
                .sum::<f64>()
                / scale;
        }
        GridFn::from_values(self.grid, values)
    }

    /// Piecewise-cubic Lagrange interpolation through the four nearest nodes.
    fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.grid.bounds();
        let h = self.grid.step();
        let slack = 1e-12 * (hi - lo);
        if !(x >= lo - slack && x <= hi + slack) {
            return Err(Error::OutOfDomain { x, lo, hi });
        }
        let n = self.grid.n;
        let cell = (((x - lo) / h).floor().max(0.0) as usize).min(n - 2);
        let start = cell.saturating_sub(1).min(n - 4);
        let mut acc = 0.0;
        for j in 0..4 {
            let xj = self.grid.point(start + j);
            let mut l = 1.0;
            for m in 0..4 {
                if m != j {
                    let xm = self.grid.point(start + m);
                    l *= (x - xm) / (xj - xm);
                }
            }
            acc += l * self.values[start + j];
        }
        Ok(acc)
    }

    fn canonicalize(&mut self) {}

    fn footprint(&self) -> usize {
        self.values.len() * std::mem::size_of::<f64>() + std::mem::size_of::<Grid>()
    }
}

impl fmt::Display for GridFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.grid.bounds();
        write!(f, "grid[{} points on [{lo}, {hi}]]", self.grid.n)
    }
}
