//! Exact rational values.
//!
//! Every table entry, mass and distribution weight is a [`Rational`]. Values
//! are always kept in lowest terms with a positive denominator, and both
//! `p/q` fractions and decimal literals parse without rounding.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational literal `{literal}`: {reason}")]
pub struct RationalParseError {
    pub literal: String,
    pub reason: &'static str,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the value lies in the closed unit interval.
    pub fn is_unit(&self) -> bool {
        !self.is_negative() && self.0 <= BigRational::one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Rational(BigRational::one() - &self.0)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
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

fn parse_integer(digits: &str, literal: &str) -> Result<BigInt, RationalParseError> {
    let unsigned = digits.strip_prefix('-').unwrap_or(digits);
    if unsigned.is_empty() || !unsigned.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError {
            literal: literal.to_string(),
            reason: "expected decimal digits",
        });
    }
    // Digits were checked above, so this cannot fail.
    Ok(digits.parse::<BigInt>().expect("validated digits"))
}

impl FromStr for Rational {
    type Err = RationalParseError;

    fn from_str(literal: &str) -> Result<Self, Self::Err> {
        let err = |reason| RationalParseError {
            literal: literal.to_string(),
            reason,
        };
        if literal.is_empty() {
            return Err(err("empty literal"));
        }
        if let Some((numer, denom)) = literal.split_once('/') {
            let numer = parse_integer(numer, literal)?;
            if denom.starts_with('-') {
                return Err(err("denominator must be positive"));
            }
            let denom = parse_integer(denom, literal)?;
            if denom.is_zero() {
                return Err(err("zero denominator"));
            }
            return Ok(Rational(BigRational::new(numer, denom)));
        }
        if let Some((whole, frac)) = literal.split_once('.') {
            let negative = whole.starts_with('-');
            let whole_digits = whole.strip_prefix('-').unwrap_or(whole);
            if whole_digits.is_empty() && frac.is_empty() {
                return Err(err("expected decimal digits"));
            }
            let whole = if whole_digits.is_empty() {
                BigInt::zero()
            } else {
                parse_integer(whole_digits, literal)?
            };
            let (frac_value, scale) = if frac.is_empty() {
                (BigInt::zero(), BigInt::one())
            } else {
                let value = parse_integer(frac, literal)?;
                (value, num::pow(BigInt::from(10), frac.len()))
            };
            let magnitude = BigRational::from_integer(whole) + BigRational::new(frac_value, scale);
            return Ok(Rational(if negative { -magnitude } else { magnitude }));
        }
        Ok(Rational(BigRational::from_integer(parse_integer(literal, literal)?)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}
