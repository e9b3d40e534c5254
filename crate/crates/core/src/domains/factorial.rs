use super::{RationalPolynomial, Ring};

/// Rising factorial `x (x+1) ... (x+n-1)`; the empty product for `n = 0`.
pub fn rising_factorial<T: Ring>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| {
        acc.times(&x.plus(&T::from_int(i as i64)))
    })
}

/// Falling factorial `x (x-1) ... (x-n+1)`; the empty product for `n = 0`.
pub fn falling_factorial<T: Ring>(x: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| {
        acc.times(&x.minus(&T::from_int(i as i64)))
    })
}

/// `(x)_n` as a polynomial in `x`. The coefficient of `x^k` is `s(n, k)`.
pub fn falling_factorial_polynomial(n: usize) -> RationalPolynomial {
    falling_factorial(&RationalPolynomial::x(), n)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::domains::{factorial, Module, Rational, Surd5};

    #[test]
    fn empty_products_are_one() {
        assert_eq!(rising_factorial(&BigInt::from(17), 0), BigInt::from(1));
        assert_eq!(falling_factorial_polynomial(0), RationalPolynomial::one());
    }

    #[test]
    fn small_values() {
        assert_eq!(rising_factorial(&BigInt::from(3), 3), BigInt::from(60));
        assert_eq!(
            falling_factorial_polynomial(3),
            RationalPolynomial::from_integers(&[0, 2, -3, 1])
        );
        assert_eq!(
            falling_factorial_polynomial(4).coeff(2),
            Rational::from_integer(BigInt::from(11))
        );
    }

    #[test]
    fn rising_factorial_of_minus_golden_ratio() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let alpha = Surd5::new(half.clone(), half);
        assert_eq!(rising_factorial(&alpha.negated(), 2), Surd5::one());
    }

    #[test]
    fn falling_factorial_at_n_is_n_factorial() {
        for n in 0..=20usize {
            let x = Rational::from_integer(BigInt::from(n));
            assert_eq!(
                falling_factorial_polynomial(n).evaluate(&x),
                Rational::from_integer(factorial(n))
            );
        }
    }

    #[test]
    fn rising_falling_duality() {
        let x = RationalPolynomial::x();
        for n in 0..=15usize {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(
                rising_factorial(&x, n),
                falling_factorial(&x.negated(), n).scale(sign),
                "n = {n}"
            );
        }
    }
}
