use crate::domains::{binomial, integer_combination, Module};
use crate::error::{Error, Result};
use crate::stirling::{r_stirling2_row, stirling1_row};

fn require(what: &'static str, required: usize, actual: usize) -> Result<()> {
    if actual < required {
        return Err(Error::InsufficientLength {
            what,
            required,
            actual,
        });
    }
    Ok(())
}

/// Stirling transform `b[n] = sum_k {n k} a[k]`.
///
/// Runs down the anti-diagonals of the matrix with a single working array
/// `work[m] = a[n-m][m]`: each new initial term enters at the right end and
/// the recurrence sweeps it down to column 0. Only additions and scalings by
/// small machine integers are used.
pub fn stirling_transform<T: Module>(a: &[T]) -> Result<Vec<T>> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut work: Vec<T> = Vec::with_capacity(a.len());
    let mut out = Vec::with_capacity(a.len());
    for (n, term) in a.iter().enumerate() {
        work.push(term.clone());
        for m in (1..=n).rev() {
            work[m - 1] = work[m - 1].scale(m as i64 - 1).plus(&work[m]);
        }
        out.push(work[0].clone());
    }
    Ok(out)
}

/// Inverse Stirling transform `a[m] = sum_k s(m, k) b[k]`.
///
/// Mirror image of [`stirling_transform`]: `work[n] = a[n][m-n]`, each new
/// final term enters at the bottom and the inverse recurrence carries it up
/// to row 0.
pub fn inverse_stirling_transform<T: Module>(b: &[T]) -> Result<Vec<T>> {
    if b.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut work: Vec<T> = Vec::with_capacity(b.len());
    let mut out = Vec::with_capacity(b.len());
    for (m, term) in b.iter().enumerate() {
        work.push(term.clone());
        for n in (1..=m).rev() {
            work[n - 1] = work[n].minus(&work[n - 1].scale((m - n) as i64));
        }
        out.push(work[0].clone());
    }
    Ok(out)
}

/// `a[n][m]` from the initial sequence: `sum_{k=0}^{n} {n+m k+m}_m a[0][m+k]`.
pub fn entry_via_theorem1<T: Module>(initial: &[T], n: usize, m: usize) -> Result<T> {
    require(
        "closed form from initial sequence",
        n + m + 1,
        initial.len(),
    )?;
    let weights = r_stirling2_row(m, n + m);
    Ok(integer_combination(&weights[m..], &initial[m..=m + n]))
}

/// `a[n][m]` from the final sequence: `sum_{k=0}^{m} s(m, k) a[n+k][0]`.
pub fn entry_via_theorem2<T: Module>(final_seq: &[T], n: usize, m: usize) -> Result<T> {
    require(
        "closed form from final sequence",
        n + m + 1,
        final_seq.len(),
    )?;
    let weights = stirling1_row(m);
    Ok(integer_combination(&weights, &final_seq[n..=n + m]))
}

/// Both sides of the generalized Stirling transform identity
/// `sum_k s(m, k) b[n+k] = sum_k {n+m k+m}_m a[m+k]`, where `b` is the
/// Stirling transform of `a` (computed here, never supplied).
pub fn generalized_identity_sides<T: Module>(a: &[T], n: usize, m: usize) -> Result<(T, T)> {
    require("generalized identity", n + m + 1, a.len())?;
    let b = stirling_transform(&a[..=n + m])?;
    Ok((entry_via_theorem2(&b, n, m)?, entry_via_theorem1(a, n, m)?))
}

/// `beta[n] = sum_k C(n, k) alpha[k]`.
pub fn binomial_transform<T: Module>(a: &[T]) -> Vec<T> {
    (0..a.len())
        .map(|n| {
            let weights: Vec<_> = (0..=n).map(|k| binomial(n, k)).collect();
            integer_combination(&weights, &a[..=n])
        })
        .collect()
}

/// `alpha[n] = sum_k (-1)^(n-k) C(n, k) beta[k]`, inverse of [`binomial_transform`].
pub fn inverse_binomial_transform<T: Module>(b: &[T]) -> Vec<T> {
    (0..b.len())
        .map(|n| {
            let weights: Vec<_> = (0..=n)
                .map(|k| {
                    let c = binomial(n, k);
                    if (n - k) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .collect();
            integer_combination(&weights, &b[..=n])
        })
        .collect()
}
