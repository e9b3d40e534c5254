//! Deterministic inputs shared by the benchmarks.

use stirling_kit::{sequences, BigInt, Rational, RationalPolynomial, Values};

pub const SIZES: [usize; 3] = [16, 64, 256];

/// Bell numbers, which grow fast enough to exercise big-integer paths.
pub fn int_input(len: usize) -> Vec<BigInt> {
    match sequences::generate("bell", len)
        .expect("bell generates")
        .values()
    {
        Values::Int(xs) => xs.clone(),
        _ => unreachable!("bell is integral"),
    }
}

/// Alternating unit fractions `(-1)^n / (n + 1)`.
pub fn rational_input(len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), BigInt::from(n + 1))
        })
        .collect()
}

pub fn bernoulli_polynomials(len: usize) -> Vec<RationalPolynomial> {
    match sequences::generate("bernoulli_polynomials", len)
        .expect("bernoulli generates")
        .values()
    {
        Values::Poly(xs) => xs.clone(),
        _ => unreachable!("bernoulli_polynomials is polynomial"),
    }
}
