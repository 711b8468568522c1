//! Gamma function and the one-parameter Mittag-Leffler function.
//!
//! Gamma uses the Lanczos approximation (g = 7, nine coefficients) with the
//! reflection formula below 1/2. Small positive integers are evaluated as
//! exact factorial products.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real `x` away from the poles at 0, -1, -2, ...
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::InvalidParameter("gamma of NaN".into()));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    if x == x.floor() && x <= 30.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return Ok(acc);
    }
    if x < 0.5 {
        // Γ(x)Γ(1-x) = π / sin(πx)
        let s = (PI * x).sin();
        return Ok(PI / (s * lanczos(1.0 - x)));
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    let t = z + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * a
}

/// Γ(a)/Γ(b) without forming the (possibly overflowing) factors.
///
/// Both arguments are stepped down together with Γ(y) = (y-1)Γ(y-1) until
/// the smaller is below 30, then evaluated directly.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    let (mut a, mut b) = (a, b);
    let mut factor = 1.0;
    while a > 30.0 && b > 30.0 {
        a -= 1.0;
        b -= 1.0;
        factor *= a / b;
    }
    Ok(factor * gamma(a)? / gamma(b)?)
}

/// Parameters of the series evaluation of E_α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams {
    pub alpha: f64,
    pub tol: f64,
    pub max_terms: usize,
    /// Largest |t| accepted before evaluation is refused.
    pub budget: f64,
}

impl MlParams {
    /// Defaults: tol 1e-16, 2000 terms, |t| ≤ 50 for α ≥ 1/2 and ≤ 10 below.
    pub fn new(alpha: f64) -> Result<Self> {
        let p = MlParams {
            alpha,
            tol: 1e-16,
            max_terms: 2000,
            budget: if alpha >= 0.5 { 50.0 } else { 10.0 },
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        self.tol = tol;
        self.validate()?;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        self.max_terms = max_terms;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Mittag-Leffler alpha must be positive, got {}",
                self.alpha
            )));
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "Mittag-Leffler tolerance must lie in (0, 1), got {}",
                self.tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidParameter(
                "Mittag-Leffler max_terms must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// E_α(t) = Σ tⁿ / Γ(αn + 1), summed until the next term drops below
/// `tol · |partial sum|`.
///
/// Negative arguments are summed directly and lose accuracy to cancellation
/// as |t| grows.
pub fn mittag_leffler(p: &MlParams, t: f64) -> Result<f64> {
    p.validate()?;
    if !t.is_finite() || t.abs() > p.budget {
        return Err(Error::OutsideBudget {
            argument: t,
            budget: p.budget,
        });
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    let mut sum: f64 = 1.0;
    let mut term = 1.0;
    for n in 1..p.max_terms {
        // term_n = term_{n-1} · t · Γ(α(n-1)+1) / Γ(αn+1)
        let prev_arg = p.alpha * (n - 1) as f64 + 1.0;
        term *= t * gamma_ratio(prev_arg, prev_arg + p.alpha)?;
        if !term.is_finite() {
            break;
        }
        if term.abs() < p.tol * sum.abs() {
            return Ok(sum);
        }
        sum += term;
        if !sum.is_finite() {
            break;
        }
    }
    Err(Error::NonConvergence {
        argument: t,
        max_terms: p.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_small_integers_are_factorials() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(2.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_eq!(gamma(11.0).unwrap(), 3_628_800.0);
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-14);
        // Γ(-1/2) = -2√π via reflection
        assert!(rel(gamma(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
    }

    #[test]
    fn gamma_poles_are_errors() {
        for x in [0.0, -1.0, -2.0, -7.0] {
            assert_eq!(gamma(x), Err(Error::GammaPole(x)));
        }
    }

    #[test]
    fn gamma_ratio_survives_large_arguments() {
        // Γ(201)/Γ(203) = 1/(201·202)
        let r = gamma_ratio(201.0, 203.0).unwrap();
        assert!(rel(r, 1.0 / (201.0 * 202.0)) < 1e-13);
        let r = gamma_ratio(3.5, 2.5).unwrap();
        assert!(rel(r, 2.5) < 1e-14);
    }

    #[test]
    fn mittag_leffler_base_cases() {
        let p = MlParams::new(1.0).unwrap();
        assert_eq!(mittag_leffler(&p, 0.0).unwrap(), 1.0);
        assert!(rel(mittag_leffler(&p, 1.0).unwrap(), std::f64::consts::E) < 1e-14);
    }

    #[test]
    fn mittag_leffler_rejects_bad_params() {
        assert!(MlParams::new(0.0).is_err());
        assert!(MlParams::new(1.0).unwrap().with_tol(1.0).is_err());
        assert!(MlParams::new(1.0).unwrap().with_max_terms(0).is_err());
        let p = MlParams::new(1.0).unwrap();
        assert!(matches!(
            mittag_leffler(&p, 60.0),
            Err(Error::OutsideBudget { .. })
        ));
    }

    #[test]
    fn mittag_leffler_reports_non_convergence() {
        let p = MlParams::new(1.0).unwrap().with_max_terms(3).unwrap();
        assert!(matches!(
            mittag_leffler(&p, 5.0),
            Err(Error::NonConvergence { max_terms: 3, .. })
        ));
    }
}
