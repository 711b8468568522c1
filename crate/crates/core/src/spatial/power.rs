use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::metrics;
use crate::scalar::Scalar;

use super::Coefficient;

/// Finite sum Σ c_μ x^μ with exact nonnegative rational exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSum<S: Scalar> {
    terms: BTreeMap<FracExponent, S>,
}

impl<S: Scalar> Default for PowerSum<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> PowerSum<S> {
    pub fn zero() -> Self {
        PowerSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mu: FracExponent, c: S) -> Self {
        let mut out = Self::zero();
        if !c.is_negligible() {
            out.terms.insert(mu, c);
        }
        out
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(FracExponent::ZERO, c)
    }

    /// Builds a sum from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (FracExponent, S)>) -> Self {
        let mut out = Self::zero();
        for (mu, c) in terms {
            out.push(mu, &c);
        }
        out
    }

    pub fn coefficient(&self, mu: FracExponent) -> Option<&S> {
        self.terms.get(&mu)
    }

    pub fn terms(&self) -> impl Iterator<Item = (FracExponent, &S)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    fn push(&mut self, mu: FracExponent, c: &S) {
        match self.terms.get_mut(&mu) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_negligible() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                if !c.is_negligible() {
                    self.terms.insert(mu, c.clone());
                }
            }
        }
    }
}

impl<S: Scalar> Coefficient for PowerSum<S> {
    type Scalar = S;
    const BACKEND: &'static str = "power-sum";

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_assign(&mut self, other: &Self) -> Result<()> {
        for (mu, c) in &other.terms {
            self.push(*mu, c);
        }
        Ok(())
    }

    fn scale(&self, factor: &S) -> Self {
        if factor.is_negligible() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            out.push(*mu, &c.mul_ref(factor));
        }
        out
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.push(*m1 + *m2, &c1.mul_ref(c2));
            }
        }
        metrics::add_multiplications((self.terms.len() * other.terms.len()) as u64);
        Ok(out)
    }

    fn diff(&self, order: u32) -> Result<Self> {
        let mut cur = self.clone();
        for _ in 0..order {
            let mut next = Self::zero();
            for (mu, c) in &cur.terms {
                if mu.is_zero() {
                    continue;
                }
                let lowered = mu.checked_sub(FracExponent::ONE).ok_or(Error::ExponentBelowOrder {
                    exponent: *mu,
                    order: FracExponent::ONE,
                })?;
                next.push(lowered, &c.mul_ref(&S::from_exponent(*mu)));
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Term-wise x^μ ↦ Γ(μ+1)/Γ(μ-β+1) x^{μ-β}; constants vanish.
    fn caputo_diff(&self, beta: FracExponent) -> Result<Self> {
        if beta.is_zero() || beta > FracExponent::ONE {
            return Err(Error::InvalidParameter(format!(
                "Caputo x-order must lie in (0, 1], got {beta}"
            )));
        }
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            if mu.is_zero() {
                continue;
            }
            let lowered = mu.checked_sub(beta).ok_or(Error::ExponentBelowOrder {
                exponent: *mu,
                order: beta,
            })?;
            let g = S::gamma_ratio(*mu + FracExponent::ONE, lowered + FracExponent::ONE)?;
            out.push(lowered, &c.mul_ref(&g));
        }
        Ok(out)
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let mut acc = 0.0;
        for (mu, c) in &self.terms {
            let p = if mu.is_zero() {
                1.0
            } else if let Some(n) = mu.as_integer() {
                x.powi(n as i32)
            } else if x < 0.0 {
                return Err(Error::OutOfDomain {
                    x,
                    lo: 0.0,
                    hi: f64::INFINITY,
                });
            } else {
                x.powf(mu.to_f64())
            };
            acc += c.to_f64() * p;
        }
        Ok(acc)
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| !c.is_negligible());
    }

    fn footprint(&self) -> usize {
        self.terms
            .values()
            .map(|c| c.footprint() + std::mem::size_of::<FracExponent>())
            .sum()
    }
}

impl<S: Scalar> fmt::Display for PowerSum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if mu.is_zero() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*x^{mu}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;

    fn e(n: i64, d: i64) -> FracExponent {
        FracExponent::new(n, d).unwrap()
    }

    fn q(n: i64, d: i64) -> Exact {
        Exact::new(n.into(), d.into())
    }

    #[test]
    fn additive_inverse_is_empty() {
        let a = PowerSum::monomial(e(2, 1), q(1, 1));
        let b = PowerSum::monomial(e(2, 1), q(-1, 1));
        let s = a.add(&b).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.term_count(), 0);
    }

    #[test]
    fn exponents_add_under_product() {
        let a = PowerSum::monomial(e(1, 2), q(1, 1));
        let b = PowerSum::monomial(e(3, 2), q(1, 1));
        assert_eq!(a.mul(&b).unwrap(), PowerSum::monomial(e(2, 1), q(1, 1)));
    }

    #[test]
    fn power_rule() {
        let a = PowerSum::monomial(e(2, 1), q(1, 1));
        assert_eq!(a.diff(1).unwrap(), PowerSum::monomial(e(1, 1), q(2, 1)));
        let frac = PowerSum::monomial(e(1, 2), q(1, 1));
        assert!(matches!(frac.diff(1), Err(Error::ExponentBelowOrder { .. })));
    }

    #[test]
    fn caputo_reduces_to_classical_at_one() {
        let a = PowerSum::monomial(e(3, 1), q(1, 1));
        assert_eq!(
            a.caputo_diff(FracExponent::ONE).unwrap(),
            PowerSum::monomial(e(2, 1), q(3, 1))
        );
        let c = PowerSum::constant(q(5, 1));
        assert!(c.caputo_diff(e(1, 2)).unwrap().is_zero());
    }

    #[test]
    fn caputo_of_x_two_beta() {
        let beta = e(1, 2);
        let a: PowerSum<f64> = PowerSum::monomial(beta + beta, 1.0);
        let d = a.caputo_diff(beta).unwrap();
        let want = crate::special_fn::gamma(2.0).unwrap() / crate::special_fn::gamma(1.5).unwrap();
        let got = d.coefficient(beta).unwrap();
        assert!((got - want).abs() < 1e-14);
        let low = PowerSum::monomial(e(1, 4), 1.0);
        assert!(matches!(
            low.caputo_diff(beta),
            Err(Error::ExponentBelowOrder { .. })
        ));
    }

    #[test]
    fn evaluates() {
        let a = PowerSum::monomial(e(2, 1), q(1, 1));
        assert_eq!(a.eval(3.0).unwrap(), 9.0);
        let r = PowerSum::monomial(e(1, 2), 1.0);
        assert!(r.eval(-1.0).is_err());
        assert_eq!(r.eval(4.0).unwrap(), 2.0);
    }
}
