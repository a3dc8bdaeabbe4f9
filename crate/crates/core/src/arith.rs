//! Exact integer and rational arithmetic.
//!
//! Everything in this crate is computed with arbitrary-precision integers.
//! There is no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer as _, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Signed integer of unbounded magnitude.
pub type Integer = BigInt;

/// Non-negative greatest common divisor. `gcd(0, 0) == 0`.
pub fn gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

/// Greatest common divisor of every value in `values`; zero for an empty or
/// all-zero input.
pub fn gcd_all<'a, I>(values: I) -> Integer
where
    I: IntoIterator<Item = &'a Integer>,
{
    let mut acc = Integer::zero();
    for v in values {
        acc = acc.gcd(v);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Returns the non-negative root of `n` when `n` is a perfect square.
///
/// Uses the exact integer square root, so results are correct for any
/// magnitude.
pub fn is_perfect_square(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Fixed-width variant of [`is_perfect_square`] used on hot search loops.
pub fn is_perfect_square_u64(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r.checked_mul(r) == Some(n)).then_some(r)
}

/// An exact fraction, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Integer,
    den: Integer,
}

impl Rational {
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: Integer, mut den: Integer) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rational { num, den }
    }

    pub fn zero() -> Self {
        Rational { num: Integer::zero(), den: Integer::one() }
    }

    pub fn one() -> Self {
        Rational { num: Integer::one(), den: Integer::one() }
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational { num: n.into(), den: Integer::one() }
    }

    pub fn numerator(&self) -> &Integer {
        &self.num
    }

    pub fn denominator(&self) -> &Integer {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The value as an integer, if the denominator is one.
    pub fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn square(&self) -> Rational {
        // Already reduced: gcd(n, d) = 1 implies gcd(n², d²) = 1.
        Rational { num: &self.num * &self.num, den: &self.den * &self.den }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Self::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn add(self, rhs: &'a Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn sub(self, rhs: &'a Rational) -> Rational {
        if self.den == rhs.den {
            return Rational::reduce(&self.num - &rhs.num, self.den.clone());
        }
        Rational::reduce(&self.num * &rhs.den - &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn mul(self, rhs: &'a Rational) -> Rational {
        Rational::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: Integer = num.parse().map_err(|_| err())?;
        let den: Integer = den.parse().map_err(|_| err())?;
        Rational::new(num, den).map_err(|_| err())
    }
}
