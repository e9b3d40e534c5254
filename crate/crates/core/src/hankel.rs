//! Hankel matrices, exact determinants and the determinant equality between
//! a transform matrix block and the Hankel matrix of its final sequence.

use std::fmt;

use crate::domains::{ExactDivision, Field, Module, Rational, RationalPolynomial, Ring, Surd5};
use crate::error::{Error, Result};
use crate::transform::{
    binomial_transform, build_from_final, entry_via_theorem1, stirling_transform,
};
use num_bigint::BigInt;
use num_integer::Integer;

/// Nonempty square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    entries: Vec<Vec<T>>,
}

impl<T: Module> SquareMatrix<T> {
    pub fn new(entries: Vec<Vec<T>>) -> Result<Self> {
        let dim = entries.len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "matrix must have at least one row".into(),
            ));
        }
        if let Some(bad) = entries.iter().position(|r| r.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "row {bad} has {} entries, expected {dim}",
                entries[bad].len()
            )));
        }
        Ok(SquareMatrix { entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        Self::new(
            (0..dim)
                .map(|i| (0..dim).map(|j| f(i, j)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Vec<T>> {
        self.entries
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

/// Index of the first row at or below `from` with a nonzero entry in `col`.
fn find_pivot<T: Module>(a: &[Vec<T>], col: usize, from: usize) -> Option<usize> {
    (from..a.len()).find(|&r| !a[r][col].is_zero())
}

/// Bareiss elimination. Every division is exact in an integral domain.
pub fn determinant_fraction_free<T: ExactDivision>(m: &SquareMatrix<T>) -> T {
    let mut a = m.entries.clone();
    let n = a.len();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = find_pivot(&a, k, k) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotient is exact in an integral domain");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.negated()
    } else {
        det
    }
}

/// Gaussian elimination with fractions, searching down the column for a
/// nonzero pivot.
pub fn determinant_by_elimination<T: Field>(m: &SquareMatrix<T>) -> T {
    let mut a = m.entries.clone();
    let n = a.len();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = find_pivot(&a, k, k) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            det = det.negated();
        }
        let pivot_inv = a[k][k].inverse().expect("pivot is nonzero");
        det = det.times(&a[k][k]);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].times(&pivot_inv);
            for j in k..n {
                a[i][j] = a[i][j].minus(&factor.times(&a[k][j]));
            }
        }
    }
    det
}

/// Berkowitz's algorithm: only ring operations, no division at all.
pub fn determinant_division_free<T: Ring>(m: &SquareMatrix<T>) -> T {
    let a = &m.entries;
    let n = a.len();
    // Coefficients of det(xI - A_k), highest degree first.
    let mut poly = vec![T::one()];
    for k in 1..=n {
        let last = k - 1;
        let row = &a[last][..last];
        let mut col: Vec<T> = (0..last).map(|i| a[i][last].clone()).collect();
        let mut q = Vec::with_capacity(k + 1);
        q.push(T::one());
        q.push(a[last][last].negated());
        for _ in 0..last {
            let dot = row
                .iter()
                .zip(&col)
                .fold(T::zero(), |acc, (r, c)| acc.plus(&r.times(c)));
            q.push(dot.negated());
            col = (0..last)
                .map(|i| (0..last).fold(T::zero(), |acc, j| acc.plus(&a[i][j].times(&col[j]))))
                .collect();
        }
        poly = (0..=k)
            .map(|i| {
                (0..k.min(i + 1))
                    .filter(|&j| j < poly.len() && i - j < q.len())
                    .fold(T::zero(), |acc, j| acc.plus(&q[i - j].times(&poly[j])))
            })
            .collect();
    }
    let constant = poly[n].clone();
    if n.is_multiple_of(2) {
        constant
    } else {
        constant.negated()
    }
}

/// Determinant of a polynomial matrix by evaluation at `0, 1, ..., D` and
/// Newton interpolation, where `D` (the sum of the largest degree in each row)
/// bounds the degree of the result.
///
/// Entries are first scaled by the common denominator `L` of all their
/// coefficients, so every evaluation is an integer determinant; the values
/// are divided by `L^dim` before interpolating.
pub fn determinant_by_interpolation(m: &SquareMatrix<RationalPolynomial>) -> RationalPolynomial {
    let dim = m.dim();
    let bound: usize = m
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .filter_map(RationalPolynomial::degree)
                .max()
                .unwrap_or(0)
        })
        .sum();
    let common = m
        .entries
        .iter()
        .flatten()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<Vec<Vec<BigInt>>> = m
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| {
                    p.coeffs()
                        .iter()
                        .map(|c| (c * Rational::from_integer(common.clone())).to_integer())
                        .collect()
                })
                .collect()
        })
        .collect();
    let horner = |coeffs: &[BigInt], x: &BigInt| {
        coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    };
    let scale = Rational::from_integer(common.pow(dim as u32));
    let nodes: Vec<BigInt> = (0..=bound).map(BigInt::from).collect();
    let mut diffs: Vec<Rational> = nodes
        .iter()
        .map(|x| {
            let at_x = SquareMatrix {
                entries: scaled
                    .iter()
                    .map(|row| row.iter().map(|p| horner(p, x)).collect())
                    .collect(),
            };
            Rational::from_integer(determinant_fraction_free(&at_x)) / &scale
        })
        .collect();
    for level in 1..=bound {
        let gap = Rational::from_integer(BigInt::from(level));
        for i in (level..=bound).rev() {
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / &gap;
        }
    }
    let mut result = RationalPolynomial::constant(diffs[bound].clone());
    for i in (0..bound).rev() {
        let factor =
            RationalPolynomial::new(vec![Rational::from_integer(-&nodes[i]), Rational::one()]);
        result = result
            .times(&factor)
            .plus(&RationalPolynomial::constant(diffs[i].clone()));
    }
    result
}

/// Domains with a chosen exact determinant strategy.
pub trait Determinant: Ring {
    fn determinant(m: &SquareMatrix<Self>) -> Self;
}

impl Determinant for BigInt {
    fn determinant(m: &SquareMatrix<Self>) -> Self {
        determinant_fraction_free(m)
    }
}

impl Determinant for Rational {
    fn determinant(m: &SquareMatrix<Self>) -> Self {
        determinant_by_elimination(m)
    }
}

impl Determinant for Surd5 {
    fn determinant(m: &SquareMatrix<Self>) -> Self {
        determinant_by_elimination(m)
    }
}

impl Determinant for RationalPolynomial {
    fn determinant(m: &SquareMatrix<Self>) -> Self {
        determinant_by_interpolation(m)
    }
}

pub fn determinant<T: Determinant>(m: &SquareMatrix<T>) -> T {
    T::determinant(m)
}

fn require_hankel_length(what: &'static str, len: usize, n: usize) -> Result<()> {
    let required = n
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::InvalidArgument(format!("Hankel order {n} is too large")))?;
    if len < required {
        return Err(Error::InsufficientLength {
            what,
            required,
            actual: len,
        });
    }
    Ok(())
}

/// `(seq[i+j])` for `0 <= i, j <= n`.
pub fn hankel_matrix<T: Module>(seq: &[T], n: usize) -> Result<SquareMatrix<T>> {
    require_hankel_length("Hankel matrix", seq.len(), n)?;
    SquareMatrix::from_fn(n + 1, |i, j| seq[i + j].clone())
}

/// `det(hankel_matrix(seq, n))` for `n = 0..=n_max`.
pub fn hankel_transform<T: Determinant>(seq: &[T], n_max: usize) -> Result<Vec<T>> {
    require_hankel_length("Hankel transform", seq.len(), n_max)?;
    (0..=n_max)
        .map(|n| hankel_matrix(seq, n).map(|h| determinant(&h)))
        .collect()
}

/// Determinant of the leading `(n+1) x (n+1)` block of the matrix built from
/// `final_seq`, paired with the determinant of its Hankel matrix.
pub fn theorem5_check<T: Determinant>(final_seq: &[T], n: usize) -> Result<(T, T)> {
    require_hankel_length("Hankel determinant check", final_seq.len(), n)?;
    let block = build_from_final(final_seq, n, n)?;
    let lhs = determinant(&SquareMatrix::new(block.leading_block(n + 1))?);
    let rhs = determinant(&hankel_matrix(final_seq, n)?);
    Ok((lhs, rhs))
}

/// Hankel determinant of the transform of `a` against the determinant of the
/// block whose entries are written directly in terms of `a` and r-Stirling
/// numbers.
pub fn corollary_check<T: Determinant>(a: &[T], n: usize) -> Result<bool> {
    require_hankel_length("Hankel corollary check", a.len(), n)?;
    let a = &a[..2 * n + 1];
    let b = stirling_transform(a)?;
    let lhs = determinant(&hankel_matrix(&b, n)?);
    let entries = (0..=n)
        .map(|i| (0..=n).map(|j| entry_via_theorem1(a, i, j)).collect())
        .collect::<Result<Vec<Vec<T>>>>()?;
    let rhs = determinant(&SquareMatrix::new(entries)?);
    Ok(lhs == rhs)
}

/// Whether the Hankel transforms of `a` and of its binomial transform agree
/// through `n_max`.
pub fn binomial_hankel_invariance_check<T: Determinant>(a: &[T], n_max: usize) -> Result<bool> {
    require_hankel_length("binomial Hankel invariance check", a.len(), n_max)?;
    let a = &a[..2 * n_max + 1];
    Ok(hankel_transform(a, n_max)? == hankel_transform(&binomial_transform(a), n_max)?)
}
