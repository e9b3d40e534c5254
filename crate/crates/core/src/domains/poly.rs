use std::fmt;

use num_bigint::BigInt;

use super::{Canonical, DomainTag, Module, Rational, RationalAlgebra, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `Q`; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient list and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Module::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(<Rational as Module>::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Self::new(
            (0..len)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        rhs.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }
}

impl Module for RationalPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn negated(&self) -> Self {
        self.map(|c| -c)
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        self.map(|c| c * &k)
    }
}

impl Ring for RationalPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl RationalAlgebra for RationalPolynomial {
    fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|c| c * q)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }
}

/// Coefficient list, lowest degree first: `[1/6,-1,1]` is `x^2 - x + 1/6`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Canonical for RationalPolynomial {
    const DOMAIN: DomainTag = DomainTag::Poly;

    fn parse_canonical(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            domain: DomainTag::Poly,
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(err)?
            .trim();
        if inner.is_empty() {
            return Ok(Self::zero());
        }
        inner
            .split(',')
            .map(|c| Rational::parse_canonical(c).map_err(|_| err()))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}
