//! Exact rationals and the extended value `+∞` used by the slope functions.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseRatError;

/// An arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
///
/// Displays and serializes as `"p/q"`, or `"p"` when the denominator is one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True iff the value lies in ℤ.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> BigInt {
        let (q, r) = self.0.numer().div_mod_floor(self.0.denom());
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }

    /// Floor as an `i64`, or `None` if it does not fit.
    pub fn floor_i64(&self) -> Option<i64> {
        self.floor().to_i64()
    }

    pub fn ceil_i64(&self) -> Option<i64> {
        self.ceil().to_i64()
    }

    /// Nearest `f64`; only used for rendering.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
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

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"p"` or `"p/q"` with optional surrounding whitespace; the
    /// result is reduced. Decimal points are rejected on purpose.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseRatError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat::from_big(num, den))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// A rational or `+∞`. There is no `−∞`: slopes only ever escape upwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Finite(Rat),
    PositiveInfinity,
}

impl ExtRat {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::PositiveInfinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::PositiveInfinity)
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            (ExtRat::Finite(_), ExtRat::PositiveInfinity) => Ordering::Less,
            (ExtRat::PositiveInfinity, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::PositiveInfinity, ExtRat::PositiveInfinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => r.fmt(f),
            ExtRat::PositiveInfinity => f.write_str("+inf"),
        }
    }
}

/// `Rat::new` shorthand used throughout the crate and its tests.
pub fn q(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_are_reduced() {
        let r: Rat = "6/4".parse().unwrap();
        assert_eq!(r.to_string(), "3/2");
        let r: Rat = "4/-8".parse().unwrap();
        assert_eq!(r.to_string(), "-1/2");
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::int(7));
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "0.5", "a/b", "1//2", "1/2/3"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn floor_ceil_of_negatives() {
        let r = q(-7, 2);
        assert_eq!(r.floor_i64(), Some(-4));
        assert_eq!(r.ceil_i64(), Some(-3));
        assert_eq!(Rat::int(5).ceil_i64(), Some(5));
        assert_eq!(q(72, 151).floor_i64(), Some(0));
        assert_eq!(q(-56, 151).ceil_i64(), Some(0));
    }

    #[test]
    fn infinity_dominates() {
        assert!(ExtRat::PositiveInfinity > ExtRat::Finite(Rat::int(1_000_000)));
        assert_eq!(ExtRat::PositiveInfinity.to_string(), "+inf");
    }

    #[test]
    fn serde_uses_strings() {
        let v = vec![q(3, 2), Rat::int(-1)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["3/2","-1"]"#);
        let back: Vec<Rat> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
