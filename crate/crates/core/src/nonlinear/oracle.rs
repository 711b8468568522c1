//! Brute-force reference generators for the decomposition polynomials.
//!
//! The He oracle distributes N(Σ p^i u_i) over ordered index tuples without
//! grouping by degree and then collects tuples whose indices sum to `k`.
//! The D-J oracle subtracts N at two partial sums with no exponent ceiling.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fracseries::{SeriesConfig, TimeSeries};
use crate::spatial::Coefficient;

use super::eval::{evaluate, Algebra};
use super::{apply_operator, DecompositionKind, OperatorExpr};

/// Default bound on the number of tuple products the He oracle may form.
pub const DEFAULT_COMBINATORIAL_LIMIT: usize = 200_000;

struct Tuples<'a, C: Coefficient> {
    iterates: &'a [TimeSeries<C>],
    k: usize,
    limit: usize,
    used: std::cell::Cell<usize>,
}

type TupleMap<C> = BTreeMap<Vec<usize>, TimeSeries<C>>;

impl<C: Coefficient> Algebra<C> for Tuples<'_, C> {
    type Elem = TupleMap<C>;

    fn unknown(&self) -> Result<TupleMap<C>> {
        Ok(self.iterates[..=self.k]
            .iter()
            .enumerate()
            .map(|(i, u)| (vec![i], u.clone()))
            .collect())
    }

    fn add(&self, a: &TupleMap<C>, b: &TupleMap<C>) -> Result<TupleMap<C>> {
        let mut out = a.clone();
        for (key, s) in b {
            match out.get_mut(key) {
                Some(v) => v.add_assign(s)?,
                None => {
                    out.insert(key.clone(), s.clone());
                }
            }
        }
        Ok(out)
    }

    fn mul(&self, a: &TupleMap<C>, b: &TupleMap<C>) -> Result<TupleMap<C>> {
        let mut out = TupleMap::new();
        for (ka, sa) in a {
            for (kb, sb) in b {
                let used = self.used.get() + 1;
                if used > self.limit {
                    return Err(Error::CombinatorialBudget {
                        terms: used,
                        limit: self.limit,
                    });
                }
                self.used.set(used);
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                if key.iter().sum::<usize>() > self.k {
                    continue;
                }
                out.insert(key, sa.mul(sb)?);
            }
        }
        Ok(out)
    }

    fn scale(&self, a: &TupleMap<C>, s: &C::Scalar) -> TupleMap<C> {
        a.iter().map(|(k, v)| (k.clone(), v.scale(s))).collect()
    }

    fn map(
        &self,
        a: &TupleMap<C>,
        f: &dyn Fn(&TimeSeries<C>) -> Result<TimeSeries<C>>,
    ) -> Result<TupleMap<C>> {
        a.iter().map(|(k, v)| Ok((k.clone(), f(v)?))).collect()
    }
}

fn unbounded<C: Coefficient>(iterates: &[TimeSeries<C>]) -> Vec<TimeSeries<C>> {
    iterates
        .iter()
        .map(|u| u.clone().with_config(SeriesConfig::unbounded()))
        .collect()
}

/// Reference value of the k-th decomposition polynomial.
pub fn decomposition_oracle<C: Coefficient>(
    n_expr: &OperatorExpr,
    iterates: &[TimeSeries<C>],
    k: usize,
    kind: DecompositionKind,
    limit: usize,
) -> Result<TimeSeries<C>> {
    if iterates.len() <= k {
        return Err(Error::Index {
            index: k,
            len: iterates.len(),
        });
    }
    let us = unbounded(iterates);
    match kind {
        DecompositionKind::Hes => {
            let alg = Tuples {
                iterates: &us,
                k,
                limit,
                used: std::cell::Cell::new(0),
            };
            let expanded = evaluate(&alg, n_expr)?;
            let mut acc = TimeSeries::zero(SeriesConfig::unbounded());
            for (key, s) in expanded {
                if key.iter().sum::<usize>() == k {
                    acc.add_assign(&s)?;
                }
            }
            Ok(acc)
        }
        DecompositionKind::DJ => {
            let sum = |upto: usize| -> Result<TimeSeries<C>> {
                let mut s = TimeSeries::zero(SeriesConfig::unbounded());
                for u in &us[..=upto] {
                    s = s.add(u)?;
                }
                Ok(s)
            };
            let upper = apply_operator(n_expr, &sum(k)?)?;
            if k == 0 {
                return Ok(upper);
            }
            let lower = apply_operator(n_expr, &sum(k - 1)?)?;
            upper.sub(&lower)
        }
    }
}
