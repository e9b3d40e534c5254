use num_bigint::BigInt;
use num_integer::Integer;

use super::{Canonical, DomainTag, ExactDivision, Module, Ring};
use crate::error::{Error, Result};

impl Module for BigInt {
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
        self * k
    }

    fn scale(&self, k: i64) -> Self {
        self * k
    }
}

impl Ring for BigInt {
    fn one() -> Self {
        num_traits::One::one()
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_int(k: i64) -> Self {
        BigInt::from(k)
    }
}

impl ExactDivision for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Canonical for BigInt {
    const DOMAIN: DomainTag = DomainTag::Int;

    fn parse_canonical(s: &str) -> Result<Self> {
        s.trim().parse().map_err(|_| Error::Parse {
            domain: DomainTag::Int,
            input: s.to_string(),
        })
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: C(n-k+i, i) at every step
    (1..=k).fold(BigInt::one(), |acc, i| acc * (n - k + i) / i)
}

pub(crate) fn sign_power(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
