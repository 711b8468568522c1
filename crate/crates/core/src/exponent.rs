//! Exact rational exponents.
//!
//! Powers of `t` and `x` are kept as reduced fractions so that terms such as
//! `t^{2α}` produced along different paths of the recursion merge exactly.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Nonnegative exact rational power.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FracExponent(Rational64);

impl FracExponent {
    pub const ZERO: FracExponent = FracExponent(Rational64::new_raw(0, 1));
    pub const ONE: FracExponent = FracExponent(Rational64::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidParameter(format!(
                "exponent {numer}/{denom} has a zero denominator"
            )));
        }
        Self::from_ratio(Rational64::new(numer, denom))
    }

    pub fn from_ratio(r: Rational64) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidParameter(format!("exponent {r} is negative")));
        }
        Ok(FracExponent(r))
    }

    pub fn integer(n: u32) -> Self {
        FracExponent(Rational64::from_integer(n as i64))
    }

    pub fn ratio(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(self) -> bool {
        self.0.is_integer()
    }

    /// Smallest integer not below the exponent.
    pub fn ceil(self) -> u32 {
        self.0.ceil().to_integer() as u32
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `self - other`, or `None` when the difference would be negative.
    pub fn checked_sub(self, other: FracExponent) -> Option<FracExponent> {
        let d = self.0 - other.0;
        if d.is_negative() {
            None
        } else {
            Some(FracExponent(d))
        }
    }

    /// Integer value, when the exponent is integral.
    pub fn as_integer(self) -> Option<u64> {
        if self.is_integer() {
            Some(self.numer() as u64)
        } else {
            None
        }
    }

    pub fn lcm_denom(self, other: FracExponent) -> i64 {
        self.denom().lcm(&other.denom())
    }
}

impl Add for FracExponent {
    type Output = FracExponent;

    fn add(self, rhs: FracExponent) -> FracExponent {
        FracExponent(self.0 + rhs.0)
    }
}

impl fmt::Display for FracExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for FracExponent {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let r = parse_ratio(s)?;
        Self::from_ratio(r)
    }
}

/// Parses `p/q` or `p` into a reduced rational; `q` must be positive.
pub fn parse_ratio(s: &str) -> Result<Rational64> {
    let bad = || Error::InvalidParameter(format!("'{s}' is not a rational of the form p/q with q > 0"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q <= 0 {
        return Err(bad());
    }
    Ok(Rational64::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        let a: FracExponent = "9/10".parse().unwrap();
        assert_eq!(a, FracExponent::new(9, 10).unwrap());
        assert_eq!(a.to_f64(), 0.9);
        assert_eq!("2".parse::<FracExponent>().unwrap(), FracExponent::integer(2));
        assert_eq!("4/2".parse::<FracExponent>().unwrap(), FracExponent::integer(2));
        assert!("1/0".parse::<FracExponent>().is_err());
        assert!("1/-2".parse::<FracExponent>().is_err());
        assert!("-1/2".parse::<FracExponent>().is_err());
        assert!("abc".parse::<FracExponent>().is_err());
    }

    #[test]
    fn ceil_and_sub() {
        let a = FracExponent::new(9, 10).unwrap();
        assert_eq!(a.ceil(), 1);
        assert_eq!(FracExponent::integer(2).ceil(), 2);
        assert_eq!(FracExponent::new(3, 2).unwrap().ceil(), 2);
        assert_eq!(FracExponent::ONE.checked_sub(a), Some(FracExponent::new(1, 10).unwrap()));
        assert_eq!(a.checked_sub(FracExponent::ONE), None);
        assert_eq!(format!("{}", a + a), "9/5");
    }
}
