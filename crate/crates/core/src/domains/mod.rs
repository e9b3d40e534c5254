//! Exact coefficient domains.
//!
//! Every sequence term and matrix entry lives in a type implementing
//! [`Module`]: an additive group that can be scaled by integers. That is all
//! the transform recurrences need. Generating-function and determinant code
//! additionally requires [`Ring`], and for some strategies [`ExactDivision`],
//! [`Field`] or [`RationalAlgebra`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

mod factorial;
mod instrumented;
mod integer;
mod poly;
mod rational;
mod surd;

pub use factorial::{falling_factorial, falling_factorial_polynomial, rising_factorial};
pub use instrumented::{Counted, OpCounts};
pub(crate) use integer::sign_power;
pub use integer::{binomial, factorial};
pub use poly::RationalPolynomial;
pub use rational::{rational_normalize, Rational};
pub use surd::{QuadraticSurd, Surd5};

/// Additive group with scaling by integers.
pub trait Module: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;

    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;

    fn minus(&self, rhs: &Self) -> Self;

    fn negated(&self) -> Self;

    fn scale_int(&self, k: &BigInt) -> Self;

    /// Multiply by a machine integer.
    fn scale(&self, k: i64) -> Self {
        self.scale_int(&BigInt::from(k))
    }
}

/// Commutative ring with identity.
pub trait Ring: Module {
    fn one() -> Self;

    fn times(&self, rhs: &Self) -> Self;

    fn from_int(k: i64) -> Self {
        Self::one().scale(k)
    }
}

/// Integral domain where exact quotients can be computed.
pub trait ExactDivision: Ring {
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

/// Ring containing the rationals, so it can be scaled by any `p/q`.
pub trait RationalAlgebra: Ring {
    fn scale_rational(&self, q: &Rational) -> Self;

    fn from_rational(q: &Rational) -> Self {
        Self::one().scale_rational(q)
    }
}

/// Canonical text form used for interchange.
///
/// Rendering is `Display`; parsing must accept everything `Display` produces.
pub trait Canonical: Module {
    const DOMAIN: DomainTag;

    fn parse_canonical(s: &str) -> Result<Self>;
}

/// Names of the concrete domains shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainTag {
    Int,
    Rational,
    Surd5,
    Poly,
}

impl DomainTag {
    pub const ALL: [DomainTag; 4] = [
        DomainTag::Int,
        DomainTag::Rational,
        DomainTag::Surd5,
        DomainTag::Poly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DomainTag::Int => "int",
            DomainTag::Rational => "rational",
            DomainTag::Surd5 => "surd5",
            DomainTag::Poly => "poly",
        }
    }
}

impl fmt::Display for DomainTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DomainTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DomainTag::ALL
            .into_iter()
            .find(|tag| tag.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown domain {s:?}")))
    }
}

/// Sum of a sequence of terms, zero when empty.
pub fn sum<'a, T: Module + 'a>(terms: impl IntoIterator<Item = &'a T>) -> T {
    terms.into_iter().fold(T::zero(), |acc, t| acc.plus(t))
}

/// `sum_k coeffs[k] * values[k]` with big-integer weights.
pub fn integer_combination<T: Module>(coeffs: &[BigInt], values: &[T]) -> T {
    coeffs
        .iter()
        .zip(values)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .fold(T::zero(), |acc, (c, v)| acc.plus(&v.scale_int(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_tags_round_trip() {
        for tag in DomainTag::ALL {
            assert_eq!(tag.as_str().parse::<DomainTag>().unwrap(), tag);
        }
        assert!("float".parse::<DomainTag>().is_err());
    }

    #[test]
    fn integer_combination_skips_zero_weights() {
        let coeffs = [BigInt::from(2), BigInt::from(0), BigInt::from(-1)];
        let values = [BigInt::from(5), BigInt::from(100), BigInt::from(3)];
        assert_eq!(integer_combination(&coeffs, &values), BigInt::from(7));
    }
}
