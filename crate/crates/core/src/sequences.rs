//! Generators for the classical sequences used to exercise the transforms.
//!
//! Each generator has its own definition (recurrence, closed sum or Binet
//! form) so transform outputs can be checked against something other than
//! the transform. The exceptions are [`bell`], [`singleton_free`] and
//! [`r_sequence`], which are defined as transforms; their cross-checks go
//! through generating functions instead.

use num_bigint::BigInt;

use crate::domains::{
    binomial, rising_factorial, Module, Rational, RationalPolynomial, Ring, Surd5,
};
use crate::error::{Error, Result};
use crate::transform::{inverse_stirling_transform, stirling_transform, SequenceRecord, Values};

/// Names understood by [`generate`].
pub const NAMES: &[&str] = &[
    "ones",
    "fibonacci",
    "lucas",
    "fibonacci_initial",
    "derangements",
    "signed_derangements",
    "bell",
    "singleton_free",
    "catalan",
    "motzkin",
    "r_sequence",
    "bernoulli_numbers",
    "bernoulli_polynomials",
];

/// Build the named sequence with `len` terms.
pub fn generate(name: &str, len: usize) -> Result<SequenceRecord> {
    if len == 0 {
        return Err(Error::InvalidArgument(format!(
            "sequence {name:?} needs at least one term"
        )));
    }
    let (values, definition) = match name {
        "ones" => (Values::Int(ones(len)), "a(n) = 1"),
        "fibonacci" => (
            Values::Int(fibonacci(len)),
            "F(n+2) = F(n+1) + F(n), F(0)=0, F(1)=1",
        ),
        "lucas" => (
            Values::Int(lucas(len)),
            "L(n+2) = L(n+1) + L(n), L(0)=2, L(1)=1",
        ),
        "fibonacci_initial" => (
            Values::Int(fibonacci_initial(len)?),
            "(-1)^m (<-alpha>_m - <-beta>_m) / sqrt(5)",
        ),
        "derangements" => (Values::Int(derangements(len)), "D(m) = m D(m-1) + (-1)^m"),
        "signed_derangements" => (Values::Int(signed_derangements(len)), "(-1)^m D(m)"),
        "bell" => (Values::Int(bell(len)), "Stirling transform of ones"),
        "singleton_free" => (
            Values::Int(singleton_free(len)),
            "Stirling transform of signed derangements",
        ),
        "catalan" => (Values::Int(catalan(len)), "C(n+1) = C(n) 2(2n+1)/(n+2)"),
        "motzkin" => (Values::Int(motzkin(len)), "sum_k C(n,2k) C(2k,k)/(k+1)"),
        "r_sequence" => (
            Values::Int(r_sequence(len)),
            "inverse Stirling transform of Catalan",
        ),
        "bernoulli_numbers" => (
            Values::Rational(bernoulli_numbers(len)),
            "sum_k C(n+1,k) B(k) = 0, B(0) = 1",
        ),
        "bernoulli_polynomials" => (
            Values::Poly(bernoulli_polynomials(len)),
            "B(n,x) = sum_k C(n,k) B(k) x^(n-k)",
        ),
        _ => {
            return Err(Error::UnknownSequence {
                name: name.to_string(),
                known: NAMES.join(", "),
            })
        }
    };
    Ok(SequenceRecord::new(name, values)?
        .with_meta("generator", name)
        .with_meta("len", len)
        .with_meta("definition", definition))
}

pub fn ones(len: usize) -> Vec<BigInt> {
    vec![BigInt::one(); len]
}

fn linear_recurrence(len: usize, first: i64, second: i64) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = [first, second]
        .map(BigInt::from)
        .into_iter()
        .take(len)
        .collect();
    while out.len() < len {
        let n = out.len();
        let next = &out[n - 1] + &out[n - 2];
        out.push(next);
    }
    out
}

/// `F_0 = 0, F_1 = 1, ...`
pub fn fibonacci(len: usize) -> Vec<BigInt> {
    linear_recurrence(len, 0, 1)
}

/// `L_0 = 2, L_1 = 1, ...`
pub fn lucas(len: usize) -> Vec<BigInt> {
    linear_recurrence(len, 2, 1)
}

/// `(1 + sqrt 5) / 2`.
pub fn golden_ratio() -> Surd5 {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Surd5::new(half.clone(), half)
}

/// `(1 - sqrt 5) / 2`.
pub fn golden_conjugate() -> Surd5 {
    golden_ratio().conjugate()
}

fn integral(x: &Surd5, what: &str) -> Result<BigInt> {
    let q = x
        .to_rational()
        .map_err(|_| Error::Inconsistent(format!("{what} has an irrational part: {x}")))?;
    if !q.is_integer() {
        return Err(Error::Inconsistent(format!(
            "{what} is not an integer: {q}"
        )));
    }
    Ok(q.to_integer())
}

fn inverse_sqrt5() -> Surd5 {
    Surd5::new(
        Rational::zero(),
        Rational::new(BigInt::one(), BigInt::from(5)),
    )
}

/// `F_n = (alpha^n - beta^n) / sqrt 5`, evaluated exactly in `Q(sqrt 5)`.
pub fn fibonacci_binet(n: u32) -> Result<BigInt> {
    let diff = golden_ratio().pow(n).minus(&golden_conjugate().pow(n));
    integral(&diff.times(&inverse_sqrt5()), "Binet Fibonacci value")
}

/// `L_n = alpha^n + beta^n`.
pub fn lucas_binet(n: u32) -> Result<BigInt> {
    integral(
        &golden_ratio().pow(n).plus(&golden_conjugate().pow(n)),
        "Binet Lucas value",
    )
}

/// Initial sequence whose Stirling transform is Fibonacci:
/// `a_m = (-1)^m (<-alpha>_m - <-beta>_m) / sqrt 5`.
pub fn fibonacci_initial(len: usize) -> Result<Vec<BigInt>> {
    let minus_alpha = golden_ratio().negated();
    let minus_beta = golden_conjugate().negated();
    let scale = inverse_sqrt5();
    (0..len)
        .map(|m| {
            let diff = rising_factorial(&minus_alpha, m).minus(&rising_factorial(&minus_beta, m));
            let value = diff.times(&scale);
            let value = if m % 2 == 0 { value } else { value.negated() };
            integral(&value, "Fibonacci initial term")
        })
        .collect()
}

/// `D_0 = 1, D_1 = 0, D_m = m D_{m-1} + (-1)^m`.
pub fn derangements(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut current = BigInt::one();
    for m in 0..len {
        if m > 0 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            current = current * m + sign;
        }
        out.push(current.clone());
    }
    out
}

pub fn signed_derangements(len: usize) -> Vec<BigInt> {
    derangements(len)
        .into_iter()
        .enumerate()
        .map(|(m, d)| if m % 2 == 0 { d } else { -d })
        .collect()
}

fn transformed(a: Vec<BigInt>) -> Vec<BigInt> {
    if a.is_empty() {
        return a;
    }
    stirling_transform(&a).expect("input is nonempty")
}

/// Bell numbers as the Stirling transform of the all-ones sequence.
pub fn bell(len: usize) -> Vec<BigInt> {
    transformed(ones(len))
}

/// Partitions without singleton blocks, as the Stirling transform of
/// `(-1)^m D_m`.
pub fn singleton_free(len: usize) -> Vec<BigInt> {
    transformed(signed_derangements(len))
}

pub fn catalan(len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut current = BigInt::one();
    for n in 0..len {
        out.push(current.clone());
        current = current * (2 * (2 * n + 1)) / (n + 2);
    }
    out
}

/// `M_n = sum_k C(n, 2k) C(2k, k) / (k+1)`.
pub fn motzkin(len: usize) -> Vec<BigInt> {
    (0..len)
        .map(|n| {
            (0..=n / 2)
                .map(|k| binomial(n, 2 * k) * binomial(2 * k, k) / (k + 1))
                .sum()
        })
        .collect()
}

/// Row 0 of the matrix whose final sequence is Catalan.
pub fn r_sequence(len: usize) -> Vec<BigInt> {
    let c = catalan(len);
    if c.is_empty() {
        return c;
    }
    inverse_stirling_transform(&c).expect("input is nonempty")
}

/// `B_0 = 1` and `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(len: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(Rational::one());
            continue;
        }
        let partial = out
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + b * Rational::from_integer(binomial(n + 1, k))
            });
        out.push(-partial / Rational::from_integer(BigInt::from(n + 1)));
    }
    out
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_polynomials(len: usize) -> Vec<RationalPolynomial> {
    let numbers = bernoulli_numbers(len);
    (0..len)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|j| &numbers[n - j] * Rational::from_integer(binomial(n, j)))
                .collect();
            RationalPolynomial::new(coeffs)
        })
        .collect()
}
