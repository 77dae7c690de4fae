//! Arbitrary-precision exact rationals.
//!
//! `Rat` is the base field for every evaluation in the crate. It wraps
//! `num_rational::BigRational`, which maintains the canonical form we rely
//! on (reduced fraction, positive denominator). The text form is `p/q`
//! with `q > 0`, or just `p` when the denominator is one.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds `p/q`; panics if `q == 0` (construction-time misuse, not a
    /// runtime evaluation error).
    pub fn new<P: Into<BigInt>, Q: Into<BigInt>>(p: P, q: Q) -> Self {
        let q: BigInt = q.into();
        assert!(!q.is_zero(), "Rat denominator must be nonzero");
        Rat(BigRational::new(p.into(), q))
    }

    pub fn from_int<P: Into<BigInt>>(p: P) -> Self {
        Rat(BigRational::from_integer(p.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Parses `p`, `-p`, `p/q` with decimal integers.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
        match s.split_once('/') {
            None => {
                let p = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat::from_int(p))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rat::new(p, q))
            }
        }
    }
}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.numer().hash(state);
        self.0.denom().hash(state);
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Rat::parse(s)
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Div<&Rat> for &Rat {
    type Output = Rat;
    /// Panicking division for construction-time arithmetic; evaluation
    /// paths use [`Rat::recip`] and surface [`Error::DivisionByZero`].
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "Rat division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        (&self) / (&rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

/// Shorthand for `p/q` used throughout tests and fixtures.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}

/// Shorthand for an integer rational.
pub fn ri(p: i64) -> Rat {
    Rat::from_int(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = Rat::new(2, -4);
        assert_eq!(a, rat(-1, 2));
        assert!(a.denom() > &BigInt::zero());
        assert_eq!(a.to_string(), "-1/2");
        assert_eq!(ri(7).to_string(), "7");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-3", "5/6", "-22/7", "100000000000000000001/3"] {
            let r = Rat::parse(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("a/b").is_err());
        assert_eq!(Rat::parse("4/2").unwrap(), ri(2));
    }

    #[test]
    fn ordering_is_total() {
        assert!(rat(1, 3) < rat(1, 2));
        assert!(rat(-1, 2) < rat(1, 3));
        assert_eq!(rat(2, 6), rat(1, 3));
    }

    #[test]
    fn recip_of_zero_errors() {
        assert_eq!(Rat::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(rat(3, 4).recip().unwrap(), rat(4, 3));
    }
}
