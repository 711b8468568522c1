use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::metrics;
use crate::scalar::Scalar;

use super::Coefficient;

/// Finite sum Σ c_{j,q} e^{jσx} (1 + e^{σx})^{-q}.
///
/// The basis is treated as a free ring in e^{σx}, e^{-σx} and (1+e^{σx})^{-1}:
/// products add `j` and `q`, and the identity e^{σx}(1+e^{σx})^{-1} =
/// 1 - (1+e^{σx})^{-1} is not used to rewrite terms. Two sums are equal in
/// canonical form when their term maps agree.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpRationalSum<S: Scalar> {
    sigma: Rational64,
    terms: BTreeMap<(i64, u32), S>,
}

impl<S: Scalar> ExpRationalSum<S> {
    pub fn zero(sigma: Rational64) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::InvalidParameter(
                "exponential scale sigma must be nonzero".into(),
            ));
        }
        Ok(ExpRationalSum {
            sigma,
            terms: BTreeMap::new(),
        })
    }

    /// Single term c e^{jσx} (1 + e^{σx})^{-q}.
    pub fn term(sigma: Rational64, j: i64, q: u32, c: S) -> Result<Self> {
        let mut out = Self::zero(sigma)?;
        out.push((j, q), &c);
        Ok(out)
    }

    pub fn sigma(&self) -> Rational64 {
        self.sigma
    }

    pub fn coefficient(&self, j: i64, q: u32) -> Option<&S> {
        self.terms.get(&(j, q))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, u32), &S)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    fn push(&mut self, key: (i64, u32), c: &S) {
        match self.terms.get_mut(&key) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_negligible() {
                    self.terms.remove(&key);
                }
            }
            None => {
                if !c.is_negligible() {
                    self.terms.insert(key, c.clone());
                }
            }
        }
    }

    fn check_sigma(&self, other: &Self) -> Result<()> {
        if self.sigma != other.sigma && !self.terms.is_empty() && !other.terms.is_empty() {
            return Err(Error::BackendMismatch(format!(
                "exponential scales differ: {} vs {}",
                self.sigma, other.sigma
            )));
        }
        Ok(())
    }

    fn diff_once(&self) -> Self {
        let s = S::from_ratio(self.sigma);
        let mut out = ExpRationalSum {
            sigma: self.sigma,
            terms: BTreeMap::new(),
        };
        for (&(j, q), c) in &self.terms {
            let cs = c.mul_ref(&s);
            if j != 0 {
                out.push((j, q), &cs.mul_ref(&S::from_integer(j)));
            }
            if q != 0 {
                out.push((j + 1, q + 1), &cs.mul_ref(&S::from_integer(-(q as i64))));
            }
        }
        out
    }
}

impl<S: Scalar> Coefficient for ExpRationalSum<S> {
    type Scalar = S;
    const BACKEND: &'static str = "exp-rational";

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_sigma(other)?;
        if self.terms.is_empty() {
            self.sigma = other.sigma;
        }
        for (k, c) in &other.terms {
            self.push(*k, c);
        }
        Ok(())
    }

    fn scale(&self, factor: &S) -> Self {
        let mut out = ExpRationalSum {
            sigma: self.sigma,
            terms: BTreeMap::new(),
        };
        if factor.is_negligible() {
            return out;
        }
        for (k, c) in &self.terms {
            out.push(*k, &c.mul_ref(factor));
        }
        out
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.check_sigma(other)?;
        let sigma = if self.terms.is_empty() {
            other.sigma
        } else {
            self.sigma
        };
        let mut out = ExpRationalSum {
            sigma,
            terms: BTreeMap::new(),
        };
        for (&(j1, q1), c1) in &self.terms {
            for (&(j2, q2), c2) in &other.terms {
                out.push((j1 + j2, q1 + q2), &c1.mul_ref(c2));
            }
        }
        metrics::add_multiplications((self.terms.len() * other.terms.len()) as u64);
        Ok(out)
    }

    fn diff(&self, order: u32) -> Result<Self> {
        let mut cur = self.clone();
        for _ in 0..order {
            cur = cur.diff_once();
        }
        Ok(cur)
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let s = num_traits::ToPrimitive::to_f64(&self.sigma).unwrap_or(f64::NAN) * x;
        let w = 1.0 / (1.0 + s.exp());
        let mut acc = 0.0;
        for (&(j, q), c) in &self.terms {
            acc += c.to_f64() * (j as f64 * s).exp() * w.powi(q as i32);
        }
        Ok(acc)
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| !c.is_negligible());
    }

    fn footprint(&self) -> usize {
        self.terms
            .values()
            .map(|c| c.footprint() + std::mem::size_of::<(i64, u32)>())
            .sum()
    }
}

impl<S: Scalar> fmt::Display for ExpRationalSum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let s = self.sigma;
        for (i, (&(j, q), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if j != 0 {
                write!(f, "*exp({}*x)", s * j)?;
            }
            if q != 0 {
                write!(f, "*(1+exp({s}*x))^-{q}")?;
            }
        }
        Ok(())
    }
}
