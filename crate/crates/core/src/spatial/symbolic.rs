use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::metrics;
use crate::scalar::{Exact, Scalar};

use super::Coefficient;

/// Sorted (symbol index, power) pairs.
type Monomial = Vec<(u32, u32)>;

/// Polynomials with rational coefficients in abstract symbols u0, u1, ….
///
/// Standing in for the iterates themselves, this algebra exposes the
/// decomposition polynomials in closed symbolic form. It has no x-dependence,
/// so derivatives and evaluation are unsupported.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Symbolic {
    terms: BTreeMap<Monomial, Exact>,
}

impl Symbolic {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Exact) -> Self {
        let mut out = Self::zero();
        out.push(Vec::new(), &c);
        out
    }

    /// The symbol u_i.
    pub fn symbol(i: u32) -> Self {
        let mut out = Self::zero();
        out.terms.insert(vec![(i, 1)], <Exact as Scalar>::one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[(u32, u32)], &Exact)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    fn push(&mut self, m: Monomial, c: &Exact) {
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_negligible() {
                    self.terms.remove(&m);
                }
            }
            None => {
                if !c.is_negligible() {
                    self.terms.insert(m, c.clone());
                }
            }
        }
    }
}

fn merge(a: &[(u32, u32)], b: &[(u32, u32)]) -> Monomial {
    let mut out: BTreeMap<u32, u32> = a.iter().copied().collect();
    for &(s, p) in b {
        *out.entry(s).or_insert(0) += p;
    }
    out.into_iter().collect()
}

impl Coefficient for Symbolic {
    type Scalar = Exact;
    const BACKEND: &'static str = "symbolic";

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_assign(&mut self, other: &Self) -> Result<()> {
        for (m, c) in &other.terms {
            self.push(m.clone(), c);
        }
        Ok(())
    }

    fn scale(&self, factor: &Exact) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.push(m.clone(), &c.mul_ref(factor));
        }
        out
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        metrics::add_multiplications((self.terms.len() * other.terms.len()) as u64);
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.push(merge(ma, mb), &ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    fn diff(&self, _order: u32) -> Result<Self> {
        Err(Error::UnsupportedBackend {
            backend: Self::BACKEND,
            operation: "x-derivatives",
        })
    }

    fn eval(&self, _x: f64) -> Result<f64> {
        Err(Error::UnsupportedBackend {
            backend: Self::BACKEND,
            operation: "point evaluation",
        })
    }

    fn canonicalize(&mut self) {
        self.terms.retain(|_, c| !c.is_negligible());
    }

    fn footprint(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, c)| m.len() * 8 + c.footprint())
            .sum::<usize>()
            + std::mem::size_of::<Self>()
    }
}

/// Terms in graded lexicographic order, e.g. `2*u0*u1 + u1^2`.
impl fmt::Display for Symbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by_key(|(m, _)| {
            let degree: u32 = m.iter().map(|p| p.1).sum();
            let lex: Vec<_> = m.iter().map(|&(s, p)| (s, std::cmp::Reverse(p))).collect();
            (std::cmp::Reverse(degree), lex)
        });
        for (i, (m, c)) in order.into_iter().enumerate() {
            let negative = c.to_f64() < 0.0;
            let mag = if negative { c.neg_ref() } else { (*c).clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag == <Exact as Scalar>::one();
            if !unit || m.is_empty() {
                write!(f, "{mag}")?;
            }
            for (j, (s, p)) in m.iter().enumerate() {
                if j > 0 || !unit {
                    f.write_str("*")?;
                }
                write!(f, "u{s}")?;
                if *p > 1 {
                    write!(f, "^{p}")?;
                }
            }
        }
        Ok(())
    }
}
