use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::FracExponent;

/// Polynomial differential expression in the unknown `u`.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr {
    U,
    /// Integer-order x-derivative of the inner expression.
    Dx(u32, Box<OperatorExpr>),
    /// Caputo x-derivative of order in (0, 1].
    DxCaputo(FracExponent, Box<OperatorExpr>),
    Sum(Vec<OperatorExpr>),
    Prod(Vec<OperatorExpr>),
    Scale(Rational64, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
}

impl OperatorExpr {
    pub fn u() -> Self {
        OperatorExpr::U
    }

    pub fn dx(self, order: u32) -> Self {
        OperatorExpr::Dx(order, Box::new(self))
    }

    pub fn dx_caputo(self, beta: FracExponent) -> Self {
        OperatorExpr::DxCaputo(beta, Box::new(self))
    }

    pub fn scaled(self, numer: i64, denom: i64) -> Self {
        OperatorExpr::Scale(Rational64::new(numer, denom), Box::new(self))
    }

    pub fn pow(self, n: u32) -> Self {
        OperatorExpr::Pow(Box::new(self), n)
    }

    pub fn times(self, other: OperatorExpr) -> Self {
        match self {
            OperatorExpr::Prod(mut v) => {
                v.push(other);
                OperatorExpr::Prod(v)
            }
            s => OperatorExpr::Prod(vec![s, other]),
        }
    }

    pub fn plus(self, other: OperatorExpr) -> Self {
        match self {
            OperatorExpr::Sum(mut v) => {
                v.push(other);
                OperatorExpr::Sum(v)
            }
            s => OperatorExpr::Sum(vec![s, other]),
        }
    }

    /// Structural checks: nonempty sums and products, powers ≥ 2, positive
    /// derivative orders, Caputo orders in (0, 1].
    pub fn validate(&self) -> Result<()> {
        match self {
            OperatorExpr::U => Ok(()),
            OperatorExpr::Dx(n, e) => {
                if *n == 0 {
                    return Err(Error::InvalidOperator("x-derivative of order 0".into()));
                }
                e.validate()
            }
            OperatorExpr::DxCaputo(b, e) => {
                if b.is_zero() || *b > FracExponent::ONE {
                    return Err(Error::InvalidOperator(format!(
                        "Caputo x-order {b} is outside (0, 1]"
                    )));
                }
                e.validate()
            }
            OperatorExpr::Sum(v) | OperatorExpr::Prod(v) => {
                if v.is_empty() {
                    return Err(Error::InvalidOperator("empty sum or product".into()));
                }
                v.iter().try_for_each(OperatorExpr::validate)
            }
            OperatorExpr::Scale(r, e) => {
                if r.is_zero() {
                    return Err(Error::InvalidOperator("scale factor 0".into()));
                }
                e.validate()
            }
            OperatorExpr::Pow(e, n) => {
                if *n < 2 {
                    return Err(Error::InvalidOperator(format!(
                        "integer power must be at least 2, got {n}"
                    )));
                }
                e.validate()
            }
        }
    }

    /// Smallest and largest polynomial degree in `u` over all monomials.
    pub fn degree_range(&self) -> (u32, u32) {
        match self {
            OperatorExpr::U => (1, 1),
            OperatorExpr::Dx(_, e) | OperatorExpr::DxCaputo(_, e) | OperatorExpr::Scale(_, e) => {
                e.degree_range()
            }
            OperatorExpr::Sum(v) => v.iter().map(OperatorExpr::degree_range).fold(
                (u32::MAX, 0),
                |(lo, hi), (a, b)| (lo.min(a), hi.max(b)),
            ),
            OperatorExpr::Prod(v) => v
                .iter()
                .map(OperatorExpr::degree_range)
                .fold((0, 0), |(lo, hi), (a, b)| (lo + a, hi + b)),
            OperatorExpr::Pow(e, n) => {
                let (lo, hi) = e.degree_range();
                (lo * n, hi * n)
            }
        }
    }

    pub fn max_derivative_order(&self) -> u32 {
        match self {
            OperatorExpr::U => 0,
            OperatorExpr::Dx(n, e) => n + e.max_derivative_order(),
            OperatorExpr::DxCaputo(_, e) => 1 + e.max_derivative_order(),
            OperatorExpr::Scale(_, e) | OperatorExpr::Pow(e, _) => e.max_derivative_order(),
            OperatorExpr::Sum(v) | OperatorExpr::Prod(v) => {
                v.iter().map(OperatorExpr::max_derivative_order).max().unwrap_or(0)
            }
        }
    }

    pub fn uses_caputo(&self) -> bool {
        match self {
            OperatorExpr::U => false,
            OperatorExpr::DxCaputo(..) => true,
            OperatorExpr::Dx(_, e) | OperatorExpr::Scale(_, e) | OperatorExpr::Pow(e, _) => {
                e.uses_caputo()
            }
            OperatorExpr::Sum(v) | OperatorExpr::Prod(v) => v.iter().any(OperatorExpr::uses_caputo),
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::U => write!(f, "u"),
            OperatorExpr::Dx(n, e) if **e == OperatorExpr::U => {
                write!(f, "u_{}", "x".repeat(*n as usize))
            }
            OperatorExpr::Dx(n, e) => write!(f, "d^{n}/dx^{n}[{e}]"),
            OperatorExpr::DxCaputo(b, e) => write!(f, "D_x^({b})[{e}]"),
            OperatorExpr::Sum(v) => {
                write!(f, "(")?;
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            OperatorExpr::Prod(v) => {
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            OperatorExpr::Scale(r, e) if r.is_one() => write!(f, "{e}"),
            OperatorExpr::Scale(r, e) => write!(f, "({r})*{e}"),
            OperatorExpr::Pow(e, n) => write!(f, "{e}^{n}"),
        }
    }
}

/// Right-hand side split into a linear part `R` and a nonlinear part `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rhs {
    linear: Option<OperatorExpr>,
    nonlinear: OperatorExpr,
}

impl Rhs {
    pub fn new(linear: Option<OperatorExpr>, nonlinear: OperatorExpr) -> Result<Self> {
        if let Some(r) = &linear {
            r.validate()?;
            if r.degree_range() != (1, 1) {
                return Err(Error::InvalidOperator(format!("linear part {r} is not linear in u")));
            }
        }
        nonlinear.validate()?;
        if nonlinear.degree_range().0 < 2 {
            return Err(Error::InvalidOperator(format!(
                "nonlinear part {nonlinear} has a term of degree below 2"
            )));
        }
        Ok(Rhs { linear, nonlinear })
    }

    /// Splits the summands of `expr` by degree: degree one goes to `R`,
    /// degree two or more to `N`.
    pub fn split(expr: OperatorExpr) -> Result<Self> {
        expr.validate()?;
        let parts = match expr {
            OperatorExpr::Sum(v) => v,
            e => vec![e],
        };
        let mut linear = Vec::new();
        let mut nonlinear = Vec::new();
        for p in parts {
            match p.degree_range() {
                (1, 1) => linear.push(p),
                (lo, _) if lo >= 2 => nonlinear.push(p),
                _ => {
                    return Err(Error::InvalidOperator(format!(
                        "term {p} mixes linear and nonlinear parts"
                    )))
                }
            }
        }
        let pack = |mut v: Vec<OperatorExpr>| {
            if v.len() == 1 {
                v.pop()
            } else if v.is_empty() {
                None
            } else {
                Some(OperatorExpr::Sum(v))
            }
        };
        let nonlinear = pack(nonlinear)
            .ok_or_else(|| Error::InvalidOperator("right-hand side has no nonlinear part".into()))?;
        Rhs::new(pack(linear), nonlinear)
    }

    pub fn linear(&self) -> Option<&OperatorExpr> {
        self.linear.as_ref()
    }

    pub fn nonlinear(&self) -> &OperatorExpr {
        &self.nonlinear
    }

    pub fn uses_caputo(&self) -> bool {
        self.nonlinear.uses_caputo() || self.linear.as_ref().is_some_and(OperatorExpr::uses_caputo)
    }
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.linear {
            Some(r) => write!(f, "R = {r}; N = {}", self.nonlinear),
            None => write!(f, "R = 0; N = {}", self.nonlinear),
        }
    }
}
