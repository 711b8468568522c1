//! Evaluation of operator expressions over series-valued algebras.

use crate::error::Result;
use crate::fracseries::TimeSeries;
use crate::scalar::Scalar;
use crate::spatial::Coefficient;

use super::expr::OperatorExpr;

/// Target algebra for [`evaluate`]: how `u` is represented and how the
/// operations of an expression act on that representation.
pub(crate) trait Algebra<C: Coefficient> {
    type Elem: Clone;
    fn unknown(&self) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, a: &Self::Elem, s: &C::Scalar) -> Self::Elem;
    fn map(
        &self,
        a: &Self::Elem,
        f: &dyn Fn(&TimeSeries<C>) -> Result<TimeSeries<C>>,
    ) -> Result<Self::Elem>;
}

pub(crate) fn evaluate<C: Coefficient, A: Algebra<C>>(alg: &A, expr: &OperatorExpr) -> Result<A::Elem> {
    Ok(match expr {
        OperatorExpr::U => alg.unknown()?,
        OperatorExpr::Dx(n, e) => {
            let n = *n;
            alg.map(&evaluate(alg, e)?, &|s| s.diff_x(n))?
        }
        OperatorExpr::DxCaputo(b, e) => {
            let b = *b;
            alg.map(&evaluate(alg, e)?, &|s| s.caputo_x(b))?
        }
        OperatorExpr::Sum(v) => {
            let mut acc = evaluate(alg, &v[0])?;
            for e in &v[1..] {
                acc = alg.add(&acc, &evaluate(alg, e)?)?;
            }
            acc
        }
        OperatorExpr::Prod(v) => {
            let mut acc = evaluate(alg, &v[0])?;
            for e in &v[1..] {
                acc = alg.mul(&acc, &evaluate(alg, e)?)?;
            }
            acc
        }
        OperatorExpr::Scale(r, e) => alg.scale(&evaluate(alg, e)?, &C::Scalar::from_ratio(*r)),
        OperatorExpr::Pow(e, n) => {
            let base = evaluate(alg, e)?;
            let mut acc = base.clone();
            for _ in 1..*n {
                acc = alg.mul(&acc, &base)?;
            }
            acc
        }
    })
}

/// Plain series algebra: `u` is a single series.
pub(crate) struct Plain<'a, C: Coefficient> {
    pub u: &'a TimeSeries<C>,
}

impl<C: Coefficient> Algebra<C> for Plain<'_, C> {
    type Elem = TimeSeries<C>;

    fn unknown(&self) -> Result<TimeSeries<C>> {
        Ok(self.u.clone())
    }
    fn add(&self, a: &TimeSeries<C>, b: &TimeSeries<C>) -> Result<TimeSeries<C>> {
        a.add(b)
    }
    fn mul(&self, a: &TimeSeries<C>, b: &TimeSeries<C>) -> Result<TimeSeries<C>> {
        a.mul(b)
    }
    fn scale(&self, a: &TimeSeries<C>, s: &C::Scalar) -> TimeSeries<C> {
        a.scale(s)
    }
    fn map(
        &self,
        a: &TimeSeries<C>,
        f: &dyn Fn(&TimeSeries<C>) -> Result<TimeSeries<C>>,
    ) -> Result<TimeSeries<C>> {
        f(a)
    }
}

/// Applies `expr` to the series `u`.
pub fn apply_operator<C: Coefficient>(expr: &OperatorExpr, u: &TimeSeries<C>) -> Result<TimeSeries<C>> {
    evaluate(&Plain { u }, expr)
}

/// Polynomials in a formal parameter `p`, truncated above degree `k`, with
/// series coefficients. `u` is lifted to Σ p^i u_i.
pub(crate) struct Truncated<'a, C: Coefficient> {
    pub iterates: &'a [TimeSeries<C>],
    pub k: usize,
}

impl<C: Coefficient> Truncated<'_, C> {
    fn zero(&self) -> TimeSeries<C> {
        TimeSeries::zero(self.iterates[0].config())
    }

    /// Coefficient of p^n in a·b.
    pub(crate) fn product_coefficient(
        &self,
        a: &[TimeSeries<C>],
        b: &[TimeSeries<C>],
        n: usize,
    ) -> Result<TimeSeries<C>> {
        let mut acc = self.zero();
        for i in 0..=n {
            if a[i].is_zero() || b[n - i].is_zero() {
                continue;
            }
            acc.add_assign(&a[i].mul(&b[n - i])?)?;
        }
        Ok(acc)
    }

    /// The p^k coefficient of `expr`, computing full truncated polynomials
    /// only where a product needs them.
    pub(crate) fn top(&self, expr: &OperatorExpr) -> Result<TimeSeries<C>> {
        let k = self.k;
        Ok(match expr {
            OperatorExpr::U => self.iterates[k].clone(),
            OperatorExpr::Dx(n, e) => self.top(e)?.diff_x(*n)?,
            OperatorExpr::DxCaputo(b, e) => self.top(e)?.caputo_x(*b)?,
            OperatorExpr::Sum(v) => {
                let mut acc = self.zero();
                for e in v {
                    acc.add_assign(&self.top(e)?)?;
                }
                acc
            }
            OperatorExpr::Scale(r, e) => self.top(e)?.scale(&C::Scalar::from_ratio(*r)),
            OperatorExpr::Prod(v) if v.len() == 1 => self.top(&v[0])?,
            OperatorExpr::Prod(v) => {
                let mut acc = evaluate(self, &v[0])?;
                for e in &v[1..v.len() - 1] {
                    acc = self.mul(&acc, &evaluate(self, e)?)?;
                }
                let last = evaluate(self, &v[v.len() - 1])?;
                self.product_coefficient(&acc, &last, k)?
            }
            OperatorExpr::Pow(e, n) => {
                let base = evaluate(self, e)?;
                let mut acc = base.clone();
                for _ in 2..*n {
                    acc = self.mul(&acc, &base)?;
                }
                self.product_coefficient(&acc, &base, k)?
            }
        })
    }
}

impl<C: Coefficient> Algebra<C> for Truncated<'_, C> {
    type Elem = Vec<TimeSeries<C>>;

    fn unknown(&self) -> Result<Self::Elem> {
        Ok(self.iterates[..=self.k].to_vec())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        (0..=self.k).map(|n| self.product_coefficient(a, b, n)).collect()
    }
    fn scale(&self, a: &Self::Elem, s: &C::Scalar) -> Self::Elem {
        a.iter().map(|x| x.scale(s)).collect()
    }
    fn map(
        &self,
        a: &Self::Elem,
        f: &dyn Fn(&TimeSeries<C>) -> Result<TimeSeries<C>>,
    ) -> Result<Self::Elem> {
        a.iter().map(f).collect()
    }
}
