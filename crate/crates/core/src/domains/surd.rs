use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{Canonical, DomainTag, Field, Module, Rational, RationalAlgebra, Ring};
use crate::error::{Error, Result};

/// Element `a + b*sqrt(D)` of the quadratic field `Q(sqrt D)`.
///
/// The radicand is part of the type, so values from different fields cannot
/// be mixed. `D` must be square-free and at least 2; this is checked when the
/// first value of the type is built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticSurd<const D: u32> {
    rational_part: Rational,
    surd_part: Rational,
}

/// `Q(sqrt 5)`, home of the golden ratio.
pub type Surd5 = QuadraticSurd<5>;

const fn is_square_free(d: u32) -> bool {
    let mut p: u32 = 2;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl<const D: u32> QuadraticSurd<D> {
    const RADICAND_OK: () = assert!(
        D >= 2 && is_square_free(D),
        "radicand must be square-free and at least 2"
    );

    pub fn new(rational_part: Rational, surd_part: Rational) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::RADICAND_OK;
        QuadraticSurd {
            rational_part,
            surd_part,
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero())
    }

    /// `sqrt(D)` itself.
    pub fn sqrt_radicand() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub const fn radicand() -> u32 {
        D
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd_part
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.rational_part.clone(), -&self.surd_part)
    }

    /// Field norm `a^2 - D b^2`.
    pub fn norm(&self) -> Rational {
        &self.rational_part * &self.rational_part
            - &self.surd_part * &self.surd_part * Rational::from_integer(BigInt::from(D))
    }

    /// The rational value, provided the surd part vanishes.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.surd_part.is_zero() {
            Ok(self.rational_part.clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(<Self as Ring>::one(), |acc, _| acc.times(self))
    }
}

impl<const D: u32> Module for QuadraticSurd<D> {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.surd_part.is_zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        Self::new(
            &self.rational_part + &rhs.rational_part,
            &self.surd_part + &rhs.surd_part,
        )
    }

    fn minus(&self, rhs: &Self) -> Self {
        Self::new(
            &self.rational_part - &rhs.rational_part,
            &self.surd_part - &rhs.surd_part,
        )
    }

    fn negated(&self) -> Self {
        Self::new(-&self.rational_part, -&self.surd_part)
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        Self::new(&self.rational_part * &k, &self.surd_part * &k)
    }
}

impl<const D: u32> Ring for QuadraticSurd<D> {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }

    fn times(&self, rhs: &Self) -> Self {
        let d = Rational::from_integer(BigInt::from(D));
        let (a, b) = (&self.rational_part, &self.surd_part);
        let (c, e) = (&rhs.rational_part, &rhs.surd_part);
        Self::new(a * c + b * e * d, a * e + c * b)
    }
}

impl<const D: u32> Field for QuadraticSurd<D> {
    fn inverse(&self) -> Option<Self> {
        // D is not a square, so the norm vanishes only at zero
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(Self::new(
            conj.rational_part / &norm,
            conj.surd_part / &norm,
        ))
    }
}

impl<const D: u32> RationalAlgebra for QuadraticSurd<D> {
    fn scale_rational(&self, q: &Rational) -> Self {
        Self::new(&self.rational_part * q, &self.surd_part * q)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_rational(q.clone())
    }
}

impl<const D: u32> fmt::Display for QuadraticSurd<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd_part.is_negative() {
            write!(f, "{}-{}*sqrt({D})", self.rational_part, -&self.surd_part)
        } else {
            write!(f, "{}+{}*sqrt({D})", self.rational_part, self.surd_part)
        }
    }
}

impl Canonical for Surd5 {
    const DOMAIN: DomainTag = DomainTag::Surd5;

    /// Accepts `a+b*sqrt(5)`, `a-b*sqrt(5)` or a bare rational `a`.
    fn parse_canonical(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            domain: DomainTag::Surd5,
            input: s.to_string(),
        };
        let text = s.trim();
        let Some(head) = text.strip_suffix(&format!("*sqrt({})", Self::radicand())) else {
            return Rational::parse_canonical(text)
                .map(Self::from_rational)
                .map_err(|_| err());
        };
        // the separator is the first sign after a leading one
        let split = head
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .ok_or_else(err)?;
        let (a, b) = head.split_at(split);
        let a = Rational::parse_canonical(a).map_err(|_| err())?;
        let b = match b.strip_prefix('+') {
            Some(rest) if rest.starts_with(['+', '-']) => return Err(err()),
            Some(rest) => rest,
            None => b,
        };
        let b = Rational::parse_canonical(b).map_err(|_| err())?;
        Ok(Self::new(a, b))
    }
}
