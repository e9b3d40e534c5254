//! Truncated exponential generating functions.
//!
//! A [`TruncatedEgf`] of order `N` stores `c_0..=c_N` and stands for
//! `sum_k c_k z^k / k!`. All arithmetic is exact through order `N`; operands
//! of different orders are rejected instead of being silently truncated.
//!
//! Coefficients may live in any [`RationalAlgebra`] (rationals, `Q(sqrt 5)`,
//! polynomials over `Q`). The series substituted *into* another is always
//! rational, which is all the exp/log kernels need.

use num_bigint::BigInt;

use crate::domains::{
    factorial, falling_factorial_polynomial, rising_factorial, sign_power, Module, Rational,
    RationalAlgebra, RationalPolynomial, Ring,
};
use crate::error::{Error, Result};

/// Truncation order used when a caller does not pick one.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedEgf<T = Rational> {
    coeffs: Vec<T>,
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

fn check_orders(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::OrderMismatch { left, right });
    }
    Ok(())
}

impl<T: RationalAlgebra> TruncatedEgf<T> {
    /// Series with the given EGF coefficients; the order is `len - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(TruncatedEgf { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        TruncatedEgf {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_fn(order, |k| if k == 0 { c.clone() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// EGF coefficient `c_k`, i.e. `k! [z^k]`.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    /// Ordinary coefficient `[z^m] f = c_m / m!`.
    pub fn ordinary_coefficient(&self, m: usize) -> T {
        self.coeffs[m].scale_rational(&Rational::new(BigInt::one(), factorial(m)))
    }

    /// EGF product: `c_n(fg) = sum_k C(n, k) c_k(f) c_{n-k}(g)`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        check_orders(self.order(), rhs.order())?;
        Ok(Self::from_fn(self.order(), |n| {
            binomial_row(n)
                .iter()
                .enumerate()
                .fold(T::zero(), |acc, (k, c)| {
                    acc.plus(&self.coeffs[k].times(&rhs.coeffs[n - k]).scale_int(c))
                })
        }))
    }

    /// `f(g(z))` for a rational `g` with `g(0) = 0`.
    ///
    /// Works on ordinary coefficients: with `p_j` the ordinary series of `g^j`,
    /// `c_n(f o g) = sum_j c_j(f) p_j[n] n!/j!`.
    pub fn compose(&self, inner: &TruncatedEgf<Rational>) -> Result<Self> {
        check_orders(self.order(), inner.order())?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let g: Vec<Rational> = (0..=order).map(|k| inner.ordinary_coefficient(k)).collect();

        let mut power = vec![Rational::zero(); order + 1];
        power[0] = Rational::one();
        let mut out = vec![T::zero(); order + 1];
        for j in 0..=order {
            let j_fact = factorial(j);
            // g^j starts at z^j
            for n in j..=order {
                if power[n].is_zero() || self.coeffs[j].is_zero() {
                    continue;
                }
                let weight = &power[n] * Rational::new(factorial(n), j_fact.clone());
                out[n] = out[n].plus(&self.coeffs[j].scale_rational(&weight));
            }
            power = truncated_product(&power, &g, order);
        }
        Ok(TruncatedEgf { coeffs: out })
    }

    /// `d/dz`: EGF coefficients shift down by one, losing one order.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::InvalidArgument(
                "derivative of an order-0 series has no coefficients".into(),
            ));
        }
        Ok(TruncatedEgf {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Lower the truncation order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot raise order {} to {order}",
                self.order()
            )));
        }
        Ok(TruncatedEgf {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }
}

impl TruncatedEgf<Rational> {
    /// Reinterpret rational coefficients in a larger algebra.
    pub fn lift<T: RationalAlgebra>(&self) -> TruncatedEgf<T> {
        TruncatedEgf {
            coeffs: self.coeffs.iter().map(T::from_rational).collect(),
        }
    }
}

fn truncated_product(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn integer_series(order: usize, f: impl Fn(usize) -> BigInt) -> TruncatedEgf<Rational> {
    TruncatedEgf::from_fn(order, |k| Rational::from_integer(f(k)))
}

/// `e^z`.
pub fn exp_series(order: usize) -> TruncatedEgf<Rational> {
    exp_rz_series(1, order)
}

/// `e^z - 1`: coefficients `0, 1, 1, 1, ...`.
pub fn exp_minus_one_series(order: usize) -> TruncatedEgf<Rational> {
    integer_series(order, |k| BigInt::from(u8::from(k > 0)))
}

/// `ln(1 + z)`: `c_k = (-1)^(k-1) (k-1)!` for `k >= 1`.
pub fn log1p_series(order: usize) -> TruncatedEgf<Rational> {
    integer_series(order, |k| match k {
        0 => BigInt::zero(),
        _ => factorial(k - 1) * sign_power(k - 1),
    })
}

/// `e^(r z)`: `c_k = r^k`.
pub fn exp_rz_series(r: i64, order: usize) -> TruncatedEgf<Rational> {
    integer_series(order, |k| BigInt::from(r).pow(k as u32))
}

/// The series `z`.
pub fn identity_series(order: usize) -> TruncatedEgf<Rational> {
    integer_series(order, |k| BigInt::from(u8::from(k == 1)))
}

/// Column generating function from a row tail: given
/// `A_r(z) = sum_k a[0][r+k] z^k/k!`, returns `e^(rz) A_r(e^z - 1)`, whose
/// EGF coefficients are `a[n][r]`.
pub fn theorem3_apply<T: RationalAlgebra>(
    row_tail: &TruncatedEgf<T>,
    r: usize,
) -> Result<TruncatedEgf<T>> {
    let order = row_tail.order();
    let composed = row_tail.compose(&exp_minus_one_series(order))?;
    exp_rz_series(r as i64, order).lift().multiply(&composed)
}

/// Row generating function from a column tail: given
/// `B_r(z) = sum_k a[r+k][0] z^k/k!`, returns `B_r(ln(1 + z))`, whose EGF
/// coefficients are `a[r][m]`. The row index only enters through which tail
/// the caller supplies.
pub fn theorem4_apply<T: RationalAlgebra>(
    column_tail: &TruncatedEgf<T>,
) -> Result<TruncatedEgf<T>> {
    column_tail.compose(&log1p_series(column_tail.order()))
}

/// `1F1(p; q; scale z)` as an EGF: `c_n = scale^n <p>_n / <q>_n`.
pub fn hypergeometric_1f1(
    p: &Rational,
    q: &Rational,
    scale: i64,
    order: usize,
) -> Result<TruncatedEgf<Rational>> {
    let coeffs = (0..=order)
        .map(|n| {
            let lower = rising_factorial(q, n);
            if lower.is_zero() {
                return Err(Error::VanishingDenominator(n));
            }
            let power = Rational::from_integer(BigInt::from(scale).pow(n as u32));
            Ok(power * rising_factorial(p, n) / lower)
        })
        .collect::<Result<Vec<_>>>()?;
    TruncatedEgf::new(coeffs)
}

/// EGF coefficient `m! [z^m]` of `(1+z)^x ln(1+z) / z`, which is
/// `m! sum_{i=0}^{m} (-1)^(m-i) C(x, i) / (m-i+1)` with `C(x, i) = (x)_i / i!`.
pub fn bernoulli_row_formula(m: usize) -> RationalPolynomial {
    let sum = (0..=m).fold(RationalPolynomial::zero(), |acc, i| {
        let weight = Rational::new(
            BigInt::from(sign_power(m - i)),
            factorial(i) * BigInt::from(m - i + 1),
        );
        acc.plus(&falling_factorial_polynomial(i).scale_rational(&weight))
    });
    sum.scale_int(&factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::rational_normalize;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter()
            .map(|&x| Rational::from_integer(BigInt::from(x)))
            .collect()
    }

    fn series(xs: &[i64]) -> TruncatedEgf {
        TruncatedEgf::new(ints(xs)).unwrap()
    }

    #[test]
    fn products() {
        let inverse = exp_rz_series(-1, 8);
        assert_eq!(
            exp_series(8).multiply(&inverse).unwrap(),
            TruncatedEgf::constant(Rational::one(), 8)
        );
        let f = series(&[3, -1, 4, 1, -5]);
        assert_eq!(
            f.multiply(&TruncatedEgf::constant(Rational::one(), 4))
                .unwrap(),
            f
        );
        assert_eq!(
            f.multiply(&exp_series(3)),
            Err(Error::OrderMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn catalan_derivative_times_exp_minus_z_is_motzkin() {
        let catalan = series(&[1, 1, 2, 5, 14, 42, 132]);
        let motzkin = catalan
            .derivative()
            .unwrap()
            .multiply(&exp_rz_series(-1, 5))
            .unwrap();
        assert_eq!(motzkin, series(&[1, 1, 2, 4, 9, 21]));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            exp_minus_one_series(16).compose(&log1p_series(16)).unwrap(),
            identity_series(16)
        );
        assert_eq!(
            log1p_series(16).compose(&exp_minus_one_series(16)).unwrap(),
            identity_series(16)
        );
        assert_eq!(
            exp_series(9).compose(&identity_series(9)).unwrap(),
            exp_series(9)
        );
        assert_eq!(
            exp_series(6).compose(&exp_minus_one_series(6)).unwrap(),
            series(&[1, 1, 2, 5, 15, 52, 203])
        );
        assert_eq!(
            exp_series(3).compose(&exp_series(3)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn kernel_coefficients() {
        assert_eq!(log1p_series(3), series(&[0, 1, -1, 2]));
        assert_eq!(
            exp_rz_series(0, 4),
            TruncatedEgf::constant(Rational::one(), 4)
        );
        assert_eq!(exp_minus_one_series(4), series(&[0, 1, 1, 1, 1]));
        assert_eq!(exp_rz_series(3, 3), series(&[1, 3, 9, 27]));
    }

    #[test]
    fn column_transform_examples() {
        let bell = theorem3_apply(&exp_series(6), 0).unwrap();
        assert_eq!(bell, series(&[1, 1, 2, 5, 15, 52, 203]));

        // e^z / (1+z) built independently as a product with sum (-1)^n n! z^n/n!
        let inv_one_plus =
            TruncatedEgf::from_fn(5, |n| Rational::from_integer(factorial(n) * sign_power(n)));
        let a = exp_series(5).multiply(&inv_one_plus).unwrap();
        assert_eq!(a, series(&[1, 0, 1, -2, 9, -44]));
        assert_eq!(theorem3_apply(&a, 0).unwrap(), series(&[1, 0, 1, 1, 4, 11]));

        let one = TruncatedEgf::constant(Rational::one(), 7);
        assert_eq!(theorem3_apply(&one, 1).unwrap(), exp_series(7));
    }

    #[test]
    fn row_transform_examples() {
        let bell = series(&[1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(theorem4_apply(&bell).unwrap(), exp_series(7));
        let catalan = series(&[1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(
            theorem4_apply(&catalan).unwrap(),
            series(&[1, 1, 1, 1, 0, 1, -5, 29])
        );
    }

    #[test]
    fn hypergeometric_streams() {
        let half = rational_normalize(1, 2).unwrap();
        let two = Rational::from_integer(BigInt::from(2));
        assert_eq!(
            hypergeometric_1f1(&half, &two, 4, 5).unwrap(),
            series(&[1, 1, 2, 5, 14, 42])
        );
        assert_eq!(
            hypergeometric_1f1(&half, &two, 0, 5).unwrap(),
            TruncatedEgf::constant(Rational::one(), 5)
        );
        let three_halves = rational_normalize(3, 2).unwrap();
        let three = Rational::from_integer(BigInt::from(3));
        assert_eq!(
            hypergeometric_1f1(&three_halves, &three, 4, 3).unwrap(),
            series(&[1, 2, 5, 14])
        );
        let minus_two = Rational::from_integer(BigInt::from(-2));
        assert_eq!(
            hypergeometric_1f1(&half, &minus_two, 1, 4),
            Err(Error::VanishingDenominator(3))
        );
    }

    #[test]
    fn bernoulli_rows() {
        assert_eq!(bernoulli_row_formula(0), RationalPolynomial::one());
        let b1 = RationalPolynomial::new(vec![rational_normalize(-1, 2).unwrap(), Rational::one()]);
        assert_eq!(bernoulli_row_formula(1), b1);
        let b2 = RationalPolynomial::new(vec![
            rational_normalize(2, 3).unwrap(),
            Rational::from_integer(BigInt::from(-2)),
            Rational::one(),
        ]);
        assert_eq!(bernoulli_row_formula(2), b2);
        let finals = crate::sequences::bernoulli_polynomials(11);
        for m in 0..=10 {
            let row_entry = crate::transform::entry_via_theorem2(&finals, 0, m).unwrap();
            assert_eq!(bernoulli_row_formula(m), row_entry, "m = {m}");
        }
    }

    #[test]
    fn ordinary_coefficients_and_truncation() {
        let e = exp_series(5);
        assert_eq!(e.ordinary_coefficient(3), rational_normalize(1, 6).unwrap());
        assert_eq!(e.truncate(2).unwrap(), exp_series(2));
        assert!(e.truncate(6).is_err());
        assert!(TruncatedEgf::<Rational>::new(vec![]).is_err());
        assert!(TruncatedEgf::constant(Rational::one(), 0)
            .derivative()
            .is_err());
    }

    #[test]
    fn polynomial_coefficients_compose() {
        // e^{xz} with polynomial coefficients x^n, composed with ln(1+z), gives (x)_m
        let x = RationalPolynomial::x();
        let exz = TruncatedEgf::from_fn(6, |n| {
            (0..n).fold(RationalPolynomial::one(), |acc, _| acc.times(&x))
        });
        let row = theorem4_apply(&exz).unwrap();
        for m in 0..=6 {
            assert_eq!(row.coeff(m), &falling_factorial_polynomial(m));
        }
    }
}
