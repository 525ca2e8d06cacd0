//! Exact scalars: positive-rational geometric mode and the min-plus tropical
//! integers, behind one [`Semifield`] contract.
//!
//! Everything above this module is written once against [`Semifield`]. Running
//! a subtraction-free routine over [`TropInt`] instead of [`Rational`] is how
//! the crate tropicalizes: no symbolic piecewise-linear algebra is involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A carrier with `+`, `*`, multiplicative inverses and no required subtraction.
pub trait Semifield: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    /// True when the carrier is a field (determinants are available).
    const HAS_SUBTRACTION: bool;

    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse. Panics on the rational zero; use [`Semifield::try_inv`]
    /// when the input is not known to be invertible.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    /// Only the rational zero is non-invertible; tropical values never are.
    fn is_zero(&self) -> bool {
        false
    }

    /// The additive zero, when the carrier has one.
    fn additive_zero() -> Option<Self> {
        None
    }

    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::NonInvertible)
        } else {
            Ok(self.inv())
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Semifield sum; `None` for an empty iterator (there is no additive zero).
    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Option<Self>
    where
        Self: 'a,
    {
        items.into_iter().fold(None, |acc, v| match acc {
            None => Some(v.clone()),
            Some(a) => Some(a.add(v)),
        })
    }

    fn product<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::one(), |a, v| a.mul(v))
    }
}

/// Geometric maximum `1/(1/f_1 + ... + 1/f_k)`, with the empty case equal to one.
///
/// Tropically this is `max`.
///
/// ```
/// use geocrystal::{gmax, Rational, TropInt};
/// assert_eq!(gmax(&[Rational::from(2), Rational::from(3)]).unwrap(), Rational::new(6, 5));
/// assert_eq!(gmax::<Rational>(&[]).unwrap(), Rational::from(1));
/// assert_eq!(gmax(&[TropInt::from(3), TropInt::from(5)]).unwrap(), TropInt::from(5));
/// ```
pub fn gmax<S: Semifield>(values: &[S]) -> Result<S> {
    let mut inverses = Vec::with_capacity(values.len());
    for v in values {
        inverses.push(v.try_inv()?);
    }
    match S::sum(&inverses) {
        None => Ok(S::one()),
        Some(s) => Ok(s.inv()),
    }
}

// ---------------------------------------------------------------------------
// Rational

/// Arbitrary-precision fraction in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics on a zero denominator; see [`Rational::make`].
    pub fn new(num: i64, den: i64) -> Self {
        Self::make(BigInt::from(num), BigInt::from(den)).expect("zero denominator")
    }

    /// Normalizing constructor.
    ///
    /// ```
    /// use geocrystal::Rational;
    /// use num_bigint::BigInt;
    /// let r = Rational::make(BigInt::from(6), BigInt::from(-4)).unwrap();
    /// assert_eq!(r.to_string(), "-3/2");
    /// assert!(Rational::make(BigInt::from(1), BigInt::from(0)).is_err());
    /// ```
    pub fn make(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Lossy, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("{t:?}: {e}")));
        match s.split_once('/') {
            Some((n, d)) => Rational::make(parse(n)?, parse(d)?),
            None => Ok(Rational::from(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(Rational::from(i)),
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Semifield for Rational {
    const HAS_SUBTRACTION: bool = true;

    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of rational zero");
        Rational(self.0.recip())
    }
    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn additive_zero() -> Option<Self> {
        Some(Rational::zero())
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

// ---------------------------------------------------------------------------
// TropInt

/// Tropical integer: `add = min`, `mul = +`, `inv = -`, `one = 0`.
///
/// ```
/// use geocrystal::{Semifield, TropInt};
/// let (a, b) = (TropInt::from(3), TropInt::from(5));
/// assert_eq!(a.add(&b), TropInt::from(3));
/// assert_eq!(a.mul(&b), TropInt::from(8));
/// assert_eq!(TropInt::from(4).inv(), TropInt::from(-4));
/// assert_eq!(TropInt::one().mul(&TropInt::from(7)), TropInt::from(7));
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TropInt(pub BigInt);

impl TropInt {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<i64> for TropInt {
    fn from(v: i64) -> Self {
        TropInt(BigInt::from(v))
    }
}

impl fmt::Display for TropInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TropInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.0)
    }
}

impl Serialize for TropInt {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for TropInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(TropInt::from(i)),
            Raw::Str(s) => s.trim().parse::<BigInt>().map(TropInt).map_err(serde::de::Error::custom),
        }
    }
}

impl Semifield for TropInt {
    const HAS_SUBTRACTION: bool = false;

    fn one() -> Self {
        TropInt(BigInt::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        match self.0.cmp(&rhs.0) {
            Ordering::Greater => rhs.clone(),
            _ => self.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        TropInt(&self.0 + &rhs.0)
    }
    fn inv(&self) -> Self {
        TropInt(-&self.0)
    }
    fn from_i64(v: i64) -> Self {
        TropInt::from(v)
    }
    fn pow(&self, k: i64) -> Self {
        TropInt(&self.0 * BigInt::from(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalizes() {
        assert_eq!(r(6, -4).to_string(), "-3/2");
        assert_eq!(r(0, 5).to_string(), "0");
        assert_eq!(r(0, 5).denom(), &BigInt::from(1));
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(Rational::make(BigInt::from(3), BigInt::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5/6", "-3/2", "7", "0"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("4/-6".parse::<Rational>().unwrap(), r(-2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        let v: Rational = serde_json::from_str("\"12/8\"").unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"3/2\"");
    }

    #[test]
    fn gmax_cases() {
        assert_eq!(gmax(&[r(2, 1), r(3, 1)]).unwrap(), r(6, 5));
        assert_eq!(gmax::<Rational>(&[]).unwrap(), r(1, 1));
        assert_eq!(gmax(&[r(0, 1)]), Err(Error::NonInvertible));
        assert_eq!(gmax(&vec![r(7, 3); 4]).unwrap(), r(7, 12));
        let t = |v| TropInt::from(v);
        assert_eq!(gmax(&[t(3), t(5)]).unwrap(), t(5));
        assert_eq!(gmax(&vec![t(-2); 3]).unwrap(), t(-2));
        assert_eq!(gmax::<TropInt>(&[]).unwrap(), t(0));
    }

    #[test]
    fn tropical_pow_is_scaling() {
        assert_eq!(TropInt::from(3).pow(4), TropInt::from(12));
        assert_eq!(TropInt::from(3).pow(-2), TropInt::from(-6));
        assert_eq!(r(2, 3).pow(-2), r(9, 4));
    }
}
