use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::domains::{Canonical, DomainTag, Rational, RationalPolynomial, Surd5};
use crate::error::{Error, Result};

/// A sequence in one of the shipped domains.
#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Int(Vec<BigInt>),
    Rational(Vec<Rational>),
    Surd5(Vec<Surd5>),
    Poly(Vec<RationalPolynomial>),
}

/// Run an expression generically over whichever vector a [`Values`] holds.
///
/// ```
/// use stirling_kit::{with_values, Values, BigInt};
/// let v = Values::Int(vec![BigInt::from(3)]);
/// let len = with_values!(&v, xs => xs.len());
/// assert_eq!(len, 1);
/// ```
#[macro_export]
macro_rules! with_values {
    ($values:expr, $xs:ident => $body:expr) => {
        match $values {
            $crate::transform::Values::Int($xs) => $body,
            $crate::transform::Values::Rational($xs) => $body,
            $crate::transform::Values::Surd5($xs) => $body,
            $crate::transform::Values::Poly($xs) => $body,
        }
    };
}

fn parse_all<T: Canonical>(texts: &[String]) -> Result<Vec<T>> {
    texts.iter().map(|t| T::parse_canonical(t)).collect()
}

impl Values {
    pub fn domain(&self) -> DomainTag {
        match self {
            Values::Int(_) => DomainTag::Int,
            Values::Rational(_) => DomainTag::Rational,
            Values::Surd5(_) => DomainTag::Surd5,
            Values::Poly(_) => DomainTag::Poly,
        }
    }

    pub fn len(&self) -> usize {
        with_values!(self, xs => xs.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical text of every element.
    pub fn render(&self) -> Vec<String> {
        with_values!(self, xs => xs.iter().map(ToString::to_string).collect())
    }

    /// Parse canonical text in the given domain.
    pub fn parse(domain: DomainTag, texts: &[String]) -> Result<Values> {
        Ok(match domain {
            DomainTag::Int => Values::Int(parse_all(texts)?),
            DomainTag::Rational => Values::Rational(parse_all(texts)?),
            DomainTag::Surd5 => Values::Surd5(parse_all(texts)?),
            DomainTag::Poly => Values::Poly(parse_all(texts)?),
        })
    }

    /// First `len` terms.
    pub fn truncated(&self, len: usize) -> Values {
        match self {
            Values::Int(xs) => Values::Int(xs[..len.min(xs.len())].to_vec()),
            Values::Rational(xs) => Values::Rational(xs[..len.min(xs.len())].to_vec()),
            Values::Surd5(xs) => Values::Surd5(xs[..len.min(xs.len())].to_vec()),
            Values::Poly(xs) => Values::Poly(xs[..len.min(xs.len())].to_vec()),
        }
    }
}

/// Named, nonempty sequence with free-form provenance metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceRecord {
    name: String,
    values: Values,
    meta: BTreeMap<String, String>,
}

impl SequenceRecord {
    pub fn new(name: impl Into<String>, values: Values) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(SequenceRecord {
            name: name.into(),
            values,
            meta: BTreeMap::new(),
        })
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.meta.insert(key.into(), value.to_string());
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> DomainTag {
        self.values.domain()
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn into_values(self) -> Values {
        self.values
    }

    pub fn meta(&self) -> &BTreeMap<String, String> {
        &self.meta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_records_are_rejected() {
        assert_eq!(
            SequenceRecord::new("x", Values::Int(vec![])),
            Err(Error::EmptySequence)
        );
    }

    #[test]
    fn parse_respects_declared_domain() {
        let texts = vec!["1".to_string(), "1/2".to_string()];
        assert!(Values::parse(DomainTag::Int, &texts).is_err());
        let v = Values::parse(DomainTag::Rational, &texts).unwrap();
        assert_eq!(v.domain(), DomainTag::Rational);
        assert_eq!(v.render(), texts);
        assert_eq!(v.truncated(1).len(), 1);
    }

    #[test]
    fn record_metadata() {
        let r = SequenceRecord::new("ones", Values::Int(vec![BigInt::from(1)]))
            .unwrap()
            .with_meta("len", 1);
        assert_eq!(r.meta().get("len").map(String::as_str), Some("1"));
        assert_eq!(r.domain(), DomainTag::Int);
        assert_eq!(r.name(), "ones");
    }
}
