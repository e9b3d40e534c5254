use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Canonical, DomainTag, Field, Module, RationalAlgebra, Ring};
use crate::error::{Error, Result};

/// Exact rational number, always reduced with a positive denominator.
///
/// `Display` renders `p/q`, or just `p` when `q == 1`.
pub type Rational = BigRational;

/// Reduce `p/q` to lowest terms with a positive denominator.
pub fn rational_normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    let q = q.into();
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(p.into(), q))
}

impl Module for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        self * Rational::from_integer(k.clone())
    }
}

impl Ring for Rational {
    fn one() -> Self {
        num_traits::One::one()
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl RationalAlgebra for Rational {
    fn scale_rational(&self, q: &Rational) -> Self {
        self * q
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Canonical for Rational {
    const DOMAIN: DomainTag = DomainTag::Rational;

    fn parse_canonical(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            domain: DomainTag::Rational,
            input: s.to_string(),
        };
        let trimmed = s.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        rational_normalize(num, den)
    }
}
