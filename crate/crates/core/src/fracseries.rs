//! Truncated fractional power series in `t` with spatial coefficients.
//!
//! A [`TimeSeries`] is a finite sum Σ c_γ(x) t^γ with exact rational `γ`.
//! Every iterate of the solver and every intermediate product lives here.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::metrics;
use crate::scalar::Scalar;
use crate::spatial::Coefficient;

pub const DEFAULT_TERM_CAP: usize = 20_000;

/// Size controls carried by every series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    /// Largest total number of basis terms a series may hold.
    pub term_cap: usize,
    /// Product terms with `γ` above this are discarded.
    pub ceiling: Option<FracExponent>,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            term_cap: DEFAULT_TERM_CAP,
            ceiling: None,
        }
    }
}

impl SeriesConfig {
    pub fn unbounded() -> Self {
        SeriesConfig {
            term_cap: usize::MAX,
            ceiling: None,
        }
    }

    pub fn with_term_cap(mut self, cap: usize) -> Self {
        self.term_cap = cap;
        self
    }

    pub fn with_ceiling(mut self, ceiling: Option<FracExponent>) -> Self {
        self.ceiling = ceiling;
        self
    }

    /// The ceiling `(k_max + 3)·α + source_degree`, beyond which product
    /// terms cannot reach the iterates `u_0 … u_{k_max}`.
    pub fn suggested_ceiling(k_max: usize, alpha: FracExponent, source_degree: FracExponent) -> FracExponent {
        let mut c = source_degree;
        for _ in 0..k_max + 3 {
            c = c + alpha;
        }
        c
    }
}

#[derive(Clone, Debug)]
pub struct TimeSeries<C: Coefficient> {
    terms: BTreeMap<FracExponent, C>,
    config: SeriesConfig,
}

/// Equality of canonical forms; the size configuration is ignored.
impl<C: Coefficient> PartialEq for TimeSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coefficient> TimeSeries<C> {
    pub fn zero(config: SeriesConfig) -> Self {
        TimeSeries {
            terms: BTreeMap::new(),
            config,
        }
    }

    /// Single term `c(x) t^γ`.
    pub fn monomial(gamma: FracExponent, c: C, config: SeriesConfig) -> Result<Self> {
        let mut out = Self::zero(config);
        if !c.is_zero() {
            out.terms.insert(gamma, c);
        }
        out.check_cap()?;
        Ok(out)
    }

    /// Builds a series from `(γ, coefficient)` pairs, merging equal `γ`.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (FracExponent, C)>,
        config: SeriesConfig,
    ) -> Result<Self> {
        let mut out = Self::zero(config);
        for (g, c) in terms {
            out.push(g, &c)?;
        }
        out.check_cap()?;
        Ok(out)
    }

    pub fn config(&self) -> SeriesConfig {
        self.config
    }

    pub fn with_config(mut self, config: SeriesConfig) -> Self {
        self.config = config;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct `t` exponents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of spatial basis terms over all exponents.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(Coefficient::term_count).sum()
    }

    pub fn footprint(&self) -> usize {
        self.terms
            .values()
            .map(|c| c.footprint() + std::mem::size_of::<FracExponent>())
            .sum()
    }

    pub fn coefficient(&self, gamma: FracExponent) -> Option<&C> {
        self.terms.get(&gamma)
    }

    pub fn iter(&self) -> impl Iterator<Item = (FracExponent, &C)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn exponents(&self) -> impl Iterator<Item = FracExponent> + '_ {
        self.terms.keys().copied()
    }

    fn push(&mut self, gamma: FracExponent, c: &C) -> Result<()> {
        match self.terms.get_mut(&gamma) {
            Some(v) => {
                v.add_assign(c)?;
                if v.is_zero() {
                    self.terms.remove(&gamma);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(gamma, c.clone());
                }
            }
        }
        Ok(())
    }

    fn check_cap(&self) -> Result<()> {
        let terms = self.term_count();
        if terms > self.config.term_cap {
            return Err(Error::TermCapExceeded {
                terms,
                cap: self.config.term_cap,
            });
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        for (g, c) in &other.terms {
            self.push(*g, c)?;
        }
        self.check_cap()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &C::Scalar) -> Self {
        let mut out = Self::zero(self.config);
        for (g, c) in &self.terms {
            let s = c.scale(factor);
            if !s.is_zero() {
                out.terms.insert(*g, s);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::Scalar::from_integer(-1))
    }

    /// Cauchy product: t^{γ1}·t^{γ2} = t^{γ1+γ2}, dropping exponents above
    /// the configured ceiling.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.config);
        for (g1, c1) in &self.terms {
            for (g2, c2) in &other.terms {
                let g = *g1 + *g2;
                if let Some(ceiling) = self.config.ceiling {
                    if g > ceiling {
                        continue;
                    }
                }
                metrics::check_deadline()?;
                let p = c1.mul(c2)?;
                out.push(g, &p)?;
            }
        }
        out.check_cap()?;
        metrics::observe(out.term_count(), out.footprint())?;
        Ok(out)
    }

    /// Applies `f` to every coefficient, keeping exponents.
    pub fn map_coefficients(&self, f: impl Fn(&C) -> Result<C>) -> Result<Self> {
        let mut out = Self::zero(self.config);
        for (g, c) in &self.terms {
            let m = f(c)?;
            if !m.is_zero() {
                out.terms.insert(*g, m);
            }
        }
        Ok(out)
    }

    /// Integer-order x-derivative of every coefficient.
    pub fn diff_x(&self, order: u32) -> Result<Self> {
        self.map_coefficients(|c| c.diff(order))
    }

    /// Caputo x-derivative of every coefficient.
    pub fn caputo_x(&self, beta: FracExponent) -> Result<Self> {
        self.map_coefficients(|c| c.caputo_diff(beta))
    }

    /// Riemann-Liouville integral J^α: t^γ ↦ Γ(γ+1)/Γ(γ+α+1) t^{γ+α}.
    pub fn frac_integrate(&self, alpha: FracExponent) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("integration order must be positive".into()));
        }
        let mut out = Self::zero(self.config);
        for (g, c) in &self.terms {
            let up = *g + FracExponent::ONE;
            let factor = C::Scalar::gamma_ratio(up, up + alpha)?;
            out.terms.insert(*g + alpha, c.scale(&factor));
        }
        out.check_cap()?;
        Ok(out)
    }

    /// Caputo derivative D^α in `t`.
    ///
    /// Integer exponents below ⌈α⌉ are annihilated; exponents `γ ≥ α` map to
    /// Γ(γ+1)/Γ(γ+1-α) t^{γ-α}; anything else is rejected.
    pub fn caputo_derivative(&self, alpha: FracExponent) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("derivative order must be positive".into()));
        }
        let m = alpha.ceil() as u64;
        let mut out = Self::zero(self.config);
        for (g, c) in &self.terms {
            if let Some(n) = g.as_integer() {
                if n < m {
                    continue;
                }
            }
            let lowered = g.checked_sub(alpha).ok_or(Error::UnsupportedExponent {
                exponent: *g,
                order: alpha,
            })?;
            let factor =
                C::Scalar::gamma_ratio(*g + FracExponent::ONE, lowered + FracExponent::ONE)?;
            out.push(lowered, &c.scale(&factor))?;
        }
        Ok(out)
    }

    /// Σ c_γ(x) t^γ; at `t = 0` only the `γ = 0` term contributes.
    pub fn eval(&self, x: f64, t: f64) -> Result<f64> {
        if t < 0.0 || t.is_nan() {
            return Err(Error::NegativeTime(t));
        }
        let mut acc = 0.0;
        if t == 0.0 {
            if let Some(c) = self.terms.get(&FracExponent::ZERO) {
                acc = c.eval(x)?;
            }
            return Ok(acc);
        }
        let ln_t = t.ln();
        for (g, c) in &self.terms {
            let tp = if g.is_zero() {
                1.0
            } else {
                (g.to_f64() * ln_t).exp()
            };
            acc += c.eval(x)? * tp;
        }
        Ok(acc)
    }

    /// Drops every term with exponent above `gamma`.
    pub fn truncate_above(&self, gamma: FracExponent) -> Self {
        TimeSeries {
            terms: self
                .terms
                .range(..=gamma)
                .map(|(g, c)| (*g, c.clone()))
                .collect(),
            config: self.config,
        }
    }

    /// Smallest exponent present, if any.
    pub fn min_exponent(&self) -> Option<FracExponent> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<FracExponent> {
        self.terms.keys().next_back().copied()
    }

    pub fn canonicalize(&mut self) {
        for c in self.terms.values_mut() {
            c.canonicalize();
        }
        self.terms.retain(|_, c| !c.is_zero());
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for TimeSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "t^{g}: {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::spatial::PowerSum;

    fn e(n: i64, d: i64) -> FracExponent {
        FracExponent::new(n, d).unwrap()
    }

    fn x_times(c: Exact) -> PowerSum<Exact> {
        PowerSum::monomial(FracExponent::ONE, c)
    }

    fn q(n: i64, d: i64) -> Exact {
        Exact::new(n.into(), d.into())
    }

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn cancellation_empties_series() {
        let a = TimeSeries::monomial(FracExponent::ONE, x_times(q(1, 1)), cfg()).unwrap();
        let b = TimeSeries::monomial(FracExponent::ONE, x_times(q(-1, 1)), cfg()).unwrap();
        assert!(a.add(&b).unwrap().is_zero());
        assert_eq!(a.add(&TimeSeries::zero(cfg())).unwrap(), a);
    }

    #[test]
    fn products_add_exponents() {
        let a = TimeSeries::monomial(FracExponent::ONE, x_times(q(1, 1)), cfg()).unwrap();
        let sq = a.mul(&a).unwrap();
        let want = TimeSeries::monomial(
            e(2, 1),
            PowerSum::monomial(e(2, 1), q(1, 1)),
            cfg(),
        )
        .unwrap();
        assert_eq!(sq, want);
    }

    #[test]
    fn ceiling_discards_high_exponents() {
        let c = cfg().with_ceiling(Some(e(1, 1)));
        let a = TimeSeries::monomial(FracExponent::ONE, x_times(q(1, 1)), c).unwrap();
        assert!(a.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn integration_at_order_one_is_classical() {
        let a = TimeSeries::monomial(FracExponent::ZERO, x_times(q(1, 1)), cfg()).unwrap();
        let j = a.frac_integrate(FracExponent::ONE).unwrap();
        assert_eq!(
            j,
            TimeSeries::monomial(FracExponent::ONE, x_times(q(1, 1)), cfg()).unwrap()
        );
        let b = TimeSeries::monomial(e(2, 1), x_times(q(1, 1)), cfg()).unwrap();
        let jb = b.frac_integrate(FracExponent::ONE).unwrap();
        assert_eq!(jb.coefficient(e(3, 1)), Some(&x_times(q(1, 3))));
    }

    #[test]
    fn caputo_annihilates_constants_and_lowers_powers() {
        let a = TimeSeries::monomial(FracExponent::ZERO, x_times(q(1, 1)), cfg()).unwrap();
        assert!(a.caputo_derivative(e(1, 2)).unwrap().is_zero());
        let b = TimeSeries::monomial(e(2, 1), x_times(q(1, 1)), cfg()).unwrap();
        assert_eq!(
            b.caputo_derivative(FracExponent::ONE).unwrap(),
            TimeSeries::monomial(FracExponent::ONE, x_times(q(2, 1)), cfg()).unwrap()
        );
        let c: TimeSeries<PowerSum<f64>> =
            TimeSeries::monomial(e(1, 4), PowerSum::constant(1.0), cfg()).unwrap();
        assert!(matches!(
            c.caputo_derivative(e(1, 2)),
            Err(Error::UnsupportedExponent { .. })
        ));
    }

    #[test]
    fn evaluation_rules() {
        let empty: TimeSeries<PowerSum<f64>> = TimeSeries::zero(cfg());
        assert_eq!(empty.eval(0.3, 0.2).unwrap(), 0.0);
        let s = TimeSeries::from_terms(
            [
                (FracExponent::ZERO, PowerSum::constant(2.0)),
                (e(1, 2), PowerSum::constant(1.0)),
            ],
            cfg(),
        )
        .unwrap();
        assert_eq!(s.eval(0.0, 0.0).unwrap(), 2.0);
        assert!((s.eval(0.0, 0.25).unwrap() - 2.5).abs() < 1e-15);
        assert!(matches!(s.eval(0.0, -1.0), Err(Error::NegativeTime(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let c = cfg().with_term_cap(1);
        let a = TimeSeries::from_terms(
            [(FracExponent::ZERO, PowerSum::constant(1.0))],
            c,
        )
        .unwrap();
        let b = TimeSeries::monomial(FracExponent::ONE, PowerSum::constant(1.0), c).unwrap();
        assert!(matches!(a.add(&b), Err(Error::TermCapExceeded { terms: 2, cap: 1 })));
    }
}
