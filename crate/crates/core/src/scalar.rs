//! Coefficient fields: `f64` and exact rationals.
//!
//! Benchmarks at integral orders run in exact arithmetic, which keeps
//! Daftardar-Jafari cancellations exact and term counts honest. Fractional
//! orders need irrational Gamma ratios and run in `f64`.

use std::fmt::{Debug, Display};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exponent::FracExponent;
use crate::special_fn;

pub type Exact = BigRational;

static PRUNE_BITS: AtomicU64 = AtomicU64::new(DEFAULT_PRUNE.to_bits());

fn prune_threshold() -> f64 {
    f64::from_bits(PRUNE_BITS.load(Ordering::Relaxed))
}

/// Floating coefficients with magnitude below this are dropped.
pub const DEFAULT_PRUNE: f64 = 1e-300;

/// Changes the floating-point zero-pruning threshold for the whole process.
pub fn set_prune_threshold(threshold: f64) {
    PRUNE_BITS.store(threshold.abs().to_bits(), Ordering::Relaxed);
}

pub trait Scalar: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(r: Rational64) -> Self;
    fn from_exponent(e: FracExponent) -> Self {
        Self::from_ratio(e.ratio())
    }
    fn from_integer(n: i64) -> Self {
        Self::from_ratio(Rational64::from_integer(n))
    }
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// True for exact zero, or a float below the pruning threshold.
    fn is_negligible(&self) -> bool;
    fn to_f64(&self) -> f64;
    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
    /// Γ(a)/Γ(b).
    fn gamma_ratio(a: FracExponent, b: FracExponent) -> Result<Self>;
    /// Approximate heap plus inline size in bytes.
    fn footprint(&self) -> usize;
    fn is_exact() -> bool;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_ratio(r: Rational64) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += *other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_negligible(&self) -> bool {
        self.abs() < prune_threshold()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn gamma_ratio(a: FracExponent, b: FracExponent) -> Result<Self> {
        special_fn::gamma_ratio(a.to_f64(), b.to_f64())
    }
    fn footprint(&self) -> usize {
        std::mem::size_of::<f64>()
    }
    fn is_exact() -> bool {
        false
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_ratio(r: Rational64) -> Self {
        BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }
    fn abs_f64(&self) -> f64 {
        ratio_to_f64(&self.abs())
    }
    /// Exact only when `a - b` is an integer: the ratio is then a finite
    /// product of rationals.
    fn gamma_ratio(a: FracExponent, b: FracExponent) -> Result<Self> {
        let diff = a.ratio() - b.ratio();
        if !diff.is_integer() {
            return Err(Error::InexactCoefficient {
                numerator: a,
                denominator: b,
            });
        }
        // Γ(lo + n)/Γ(lo) = lo (lo+1) ... (lo+n-1)
        let (lo, n, invert) = if diff.is_negative() {
            (a, -diff.to_integer(), true)
        } else {
            (b, diff.to_integer(), false)
        };
        let lo = Self::from_exponent(lo);
        let mut prod = <Self as Scalar>::one();
        for i in 0..n {
            let f = &lo + <Self as Scalar>::from_integer(i);
            if f.is_zero() {
                return Err(Error::GammaPole(0.0));
            }
            prod *= f;
        }
        Ok(if invert { prod.recip() } else { prod })
    }
    fn footprint(&self) -> usize {
        std::mem::size_of::<BigRational>()
            + ((self.numer().bits() + self.denom().bits()) / 8) as usize
    }
    fn is_exact() -> bool {
        true
    }
}

/// Correctly scaled conversion for rationals whose parts overflow `f64`.
fn ratio_to_f64(r: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db - 60;
    let (n, d) = if shift > 0 {
        (r.numer().clone(), r.denom() << (shift as usize))
    } else {
        (r.numer() << ((-shift) as usize), r.denom().clone())
    };
    let q = (&n / &d).to_f64().unwrap_or(f64::NAN);
    q * 2f64.powi(shift as i32)
}
