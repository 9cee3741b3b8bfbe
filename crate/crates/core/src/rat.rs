use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar.
///
/// Always in lowest terms with positive denominator; every arithmetic
/// operation is exact. Serialized as the string `"p"` or `"p/q"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q`, reduced. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Integer value if the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.0.denom().is_one() {
            Some(self.0.numer().clone())
        } else {
            None
        }
    }

    /// Parses `"p"` or `"p/q"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::BadRational(s.to_string());
        match s.split_once('/') {
            None => {
                let p = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(p)))
            }
            Some((ps, qs)) => {
                let p = BigInt::from_str(ps.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(qs.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rat(BigRational::new(p, q)))
            }
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Rat::one();
        for _ in 0..exp {
            out *= self.clone();
        }
        out
    }

    /// `n!` as a rational, for symmetrization weights.
    pub fn factorial(n: usize) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= BigInt::from(k);
        }
        Rat(BigRational::from_integer(acc))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

// Debug prints like Display; keeps matrices of rationals readable in test output.
impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait for Rat {
            fn $assign_method(&mut self, rhs: Rat) {
                self.0.$assign_method(rhs.0);
            }
        }
        impl<'a> $assign_trait<&'a Rat> for Rat {
            fn $assign_method(&mut self, rhs: &'a Rat) {
                self.0.$assign_method(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

/// Shorthand for `Rat::new(p, q)` in tests and tables.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        Rat::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = Rat::new(2, -4);
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(Rat::new(-6, -3), Rat::from_int(2));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/2", "-22/7"] {
            assert_eq!(Rat::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Rat::parse("4/6").unwrap().to_string(), "2/3");
        assert!(Rat::parse("1/0").is_err());
        assert!(Rat::parse("x").is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(&a + &b, rat(1, 2));
        assert_eq!(&a - &b, rat(1, 6));
        assert_eq!(&a * &b, rat(1, 18));
        assert_eq!(&a / &b, rat(2, 1));
        assert_eq!(a.recip(), rat(3, 1));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(Rat::factorial(0), Rat::one());
        assert_eq!(Rat::factorial(4), Rat::from_int(24));
    }
}
