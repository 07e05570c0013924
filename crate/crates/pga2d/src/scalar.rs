//! Arbitrary-precision rational numbers in canonical reduced form.
//!
//! Every quantity in this library is a [`Rational`]. There is no floating
//! point anywhere: equality of results is exact, and degeneracy tests
//! (parallelism, collinearity, ...) are decidable zero tests.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Error raised by fallible scalar operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division (or reciprocal) of a zero value was requested.
    DivisionByZero,
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// A textual literal did not match `-?digits(/digits)?`.
    InvalidLiteral(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::ZeroDenominator => write!(f, "zero denominator"),
            ScalarError::InvalidLiteral(s) => write!(f, "invalid rational literal '{s}'"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ScalarError {}

/// An exact rational number.
///
/// Invariants (maintained by every constructor and operation):
/// - denominator is strictly positive,
/// - numerator and denominator are coprime,
/// - zero is stored as `0/1`.
///
/// Because the representation is canonical, `==` is structural equality
/// and agrees with numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing to canonical form.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, ScalarError> {
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    /// Convenience constructor from machine integers.
    pub fn ratio(numer: i64, denom: i64) -> Result<Self, ScalarError> {
        Self::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_int(n: i64) -> Self {
        Self(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn square(&self) -> Self {
        Self(&self.0 * &self.0)
    }

    /// Exact division; division by zero is an error, never a panic.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// Multiplicative inverse of a nonzero rational.
    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self(BigRational::from_integer(n))
    }
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl<'a> $Op<&'a Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$op(&rhs.0))
            }
        }

        impl $Op<Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                (&self).$op(&rhs)
            }
        }

        impl<'a> $Op<&'a Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: &'a Rational) -> Rational {
                (&self).$op(rhs)
            }
        }

        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                self.$op(&rhs)
            }
        }

        impl $OpAssign<&Rational> for Rational {
            fn $op_assign(&mut self, rhs: &Rational) {
                *self = (&*self).$op(rhs);
            }
        }

        impl $OpAssign<Rational> for Rational {
            fn $op_assign(&mut self, rhs: Rational) {
                *self = (&*self).$op(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

/// Panics on division by zero; use [`Rational::checked_div`] when the
/// divisor is not already known to be nonzero.
impl<'a> Div<&'a Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl<'a> Div<&'a Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        (&self).div(rhs)
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.div(&rhs)
    }
}

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

/// Prints `p/q`, omitting `/q` when the denominator is 1: `-3`, `5/6`.
/// This is the exact textual form used by the calculator and golden files.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

/// Parses the strict grammar `-?digits(/digits)?`.
impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let invalid = || ScalarError::InvalidLiteral(s.to_string());
        let (numer_text, denom_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let (negative, digits) = match numer_text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, numer_text),
        };
        let mut numer = parse_digits(digits).ok_or_else(invalid)?;
        if negative {
            numer = -numer;
        }
        let denom = match denom_text {
            Some(d) => parse_digits(d).ok_or_else(invalid)?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Self(BigRational::new(numer, denom)))
    }
}
