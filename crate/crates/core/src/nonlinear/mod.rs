//! Operator expressions and the He and Daftardar-Jafari decompositions of
//! the nonlinear term.

mod eval;
mod expr;
pub mod oracle;

pub use eval::apply_operator;
pub use expr::{OperatorExpr, Rhs};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fracseries::TimeSeries;
use crate::spatial::Coefficient;

use eval::Truncated;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecompositionKind {
    Hes,
    DJ,
}

impl DecompositionKind {
    pub const ALL: [DecompositionKind; 2] = [DecompositionKind::Hes, DecompositionKind::DJ];

    /// Short lowercase key used in file formats.
    pub fn key(self) -> &'static str {
        match self {
            DecompositionKind::Hes => "he",
            DecompositionKind::DJ => "dj",
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionKind::Hes => "He",
            DecompositionKind::DJ => "D-J",
        })
    }
}

impl FromStr for DecompositionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "he" | "hes" => Ok(DecompositionKind::Hes),
            "dj" | "d-j" => Ok(DecompositionKind::DJ),
            other => Err(Error::InvalidParameter(format!(
                "unknown decomposition '{other}', expected 'he' or 'dj'"
            ))),
        }
    }
}

fn check_len<C: Coefficient>(iterates: &[TimeSeries<C>], k: usize) -> Result<()> {
    if iterates.len() <= k {
        return Err(Error::Index {
            index: k,
            len: iterates.len(),
        });
    }
    Ok(())
}

/// He polynomial H_k: the p^k coefficient of N(Σ p^i u_i).
pub fn hes_polynomial<C: Coefficient>(
    n_expr: &OperatorExpr,
    iterates: &[TimeSeries<C>],
    k: usize,
) -> Result<TimeSeries<C>> {
    check_len(iterates, k)?;
    Truncated { iterates, k }.top(n_expr)
}

fn partial_sum<C: Coefficient>(iterates: &[TimeSeries<C>], upto: usize) -> Result<TimeSeries<C>> {
    let mut s = iterates[0].clone();
    for u in &iterates[1..=upto] {
        s.add_assign(u)?;
    }
    Ok(s)
}

/// Daftardar-Jafari polynomial J_k = N(u_0 + … + u_k) − N(u_0 + … + u_{k−1}),
/// with J_0 = N(u_0).
pub fn dj_polynomial<C: Coefficient>(
    n_expr: &OperatorExpr,
    iterates: &[TimeSeries<C>],
    k: usize,
) -> Result<TimeSeries<C>> {
    check_len(iterates, k)?;
    let upper = apply_operator(n_expr, &partial_sum(iterates, k)?)?;
    if k == 0 {
        return Ok(upper);
    }
    let lower = apply_operator(n_expr, &partial_sum(iterates, k - 1)?)?;
    upper.sub(&lower)
}

/// Incremental D-J generator that keeps the running partial sum and the
/// previous N(S_{k−1}) so each step evaluates N once.
#[derive(Clone, Debug)]
pub struct DjState<C: Coefficient> {
    partial: Option<TimeSeries<C>>,
    previous: Option<TimeSeries<C>>,
    next_k: usize,
}

impl<C: Coefficient> Default for DjState<C> {
    fn default() -> Self {
        DjState {
            partial: None,
            previous: None,
            next_k: 0,
        }
    }
}

impl<C: Coefficient> DjState<C> {
    /// J_k for the next index; `iterates` must hold u_0 … u_k.
    pub fn next(&mut self, n_expr: &OperatorExpr, iterates: &[TimeSeries<C>]) -> Result<TimeSeries<C>> {
        let k = self.next_k;
        check_len(iterates, k)?;
        let partial = match self.partial.take() {
            Some(mut s) => {
                s.add_assign(&iterates[k])?;
                s
            }
            None => iterates[0].clone(),
        };
        let upper = apply_operator(n_expr, &partial)?;
        let out = match &self.previous {
            Some(prev) => upper.sub(prev)?,
            None => upper.clone(),
        };
        self.partial = Some(partial);
        self.previous = Some(upper);
        self.next_k += 1;
        Ok(out)
    }
}

/// Decomposition polynomial of the requested kind.
pub fn decomposition_polynomial<C: Coefficient>(
    kind: DecompositionKind,
    n_expr: &OperatorExpr,
    iterates: &[TimeSeries<C>],
    k: usize,
) -> Result<TimeSeries<C>> {
    match kind {
        DecompositionKind::Hes => hes_polynomial(n_expr, iterates, k),
        DecompositionKind::DJ => dj_polynomial(n_expr, iterates, k),
    }
}
