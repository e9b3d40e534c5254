//! Stirling numbers of the first and second kind and r-Stirling numbers.
//!
//! Values come from row-by-row recurrences held in growable triangles.
//! The free functions share process-wide caches guarded by a mutex, so
//! concurrent point queries are fine and growth happens under the lock.

use std::collections::BTreeMap;
use std::sync::{LazyLock, Mutex, PoisonError};

use num_bigint::BigInt;

use crate::domains::{Module, Ring};
use crate::error::{Error, Result};

/// Signed Stirling numbers of the first kind `s(n, k)`.
///
/// Row `n` holds `s(n, 0..=n)` and satisfies
/// `s(n+1, k) = s(n, k-1) - n s(n, k)`.
#[derive(Debug, Clone)]
pub struct Stirling1Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Default for Stirling1Triangle {
    fn default() -> Self {
        Self::new()
    }
}

impl Stirling1Triangle {
    pub fn new() -> Self {
        Stirling1Triangle {
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn with_rows(n_max: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(n_max);
        t
    }

    /// Largest `n` currently stored.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let n = self.rows.len() - 1;
            let prev = &self.rows[n];
            let next = (0..=n + 1)
                .map(|k| {
                    let shifted = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    match prev.get(k) {
                        Some(same) => shifted - same * n,
                        None => shifted,
                    }
                })
                .collect();
            self.rows.push(next);
        }
    }

    /// `s(0..=n)` for row `n`, growing the triangle if needed.
    pub fn row(&mut self, n: usize) -> &[BigInt] {
        self.extend_to(n);
        &self.rows[n]
    }

    /// `s(n, k)`, zero for `k < 0` or `k > n`.
    pub fn get(&mut self, n: usize, k: i64) -> BigInt {
        let row = self.row(n);
        usize::try_from(k)
            .ok()
            .and_then(|k| row.get(k).cloned())
            .unwrap_or_else(BigInt::zero)
    }
}

/// r-Stirling numbers of the second kind `{n k}_r` for a fixed `r`.
///
/// `{n k}_r` counts partitions of an `n`-set into `k` blocks with the first
/// `r` elements in distinct blocks. The triangle starts at row `n = r` with
/// `{r k}_r = [k == r]` and continues by `{n k}_r = k {n-1 k}_r + {n-1 k-1}_r`.
/// Rows below `r` are identically zero and are not stored. For `r = 0` this
/// is the ordinary second-kind triangle.
#[derive(Debug, Clone)]
pub struct RStirlingTriangle {
    r: usize,
    rows: Vec<Vec<BigInt>>,
}

impl RStirlingTriangle {
    pub fn new(r: usize) -> Self {
        let base = (0..=r)
            .map(|k| {
                if k == r {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        RStirlingTriangle {
            r,
            rows: vec![base],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.r + self.rows.len() - 1
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.n_max() < n_max {
            let prev = self.rows.last().expect("base row always present");
            let n = self.n_max() + 1;
            let next = (0..=n)
                .map(|k| {
                    let stay = prev.get(k).map(|v| v * k).unwrap_or_default();
                    let open = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    stay + open
                })
                .collect();
            self.rows.push(next);
        }
    }

    /// Row `n` as `{n 0..=n}_r`; all zeros when `n < r`.
    pub fn row(&mut self, n: usize) -> Vec<BigInt> {
        if n < self.r {
            return vec![BigInt::zero(); n + 1];
        }
        self.extend_to(n);
        self.rows[n - self.r].clone()
    }

    pub fn get(&mut self, n: usize, k: i64) -> BigInt {
        if n < self.r {
            return BigInt::zero();
        }
        self.extend_to(n);
        usize::try_from(k)
            .ok()
            .and_then(|k| self.rows[n - self.r].get(k).cloned())
            .unwrap_or_else(BigInt::zero)
    }
}

static FIRST_KIND: LazyLock<Mutex<Stirling1Triangle>> =
    LazyLock::new(|| Mutex::new(Stirling1Triangle::new()));

static SECOND_KIND: LazyLock<Mutex<BTreeMap<usize, RStirlingTriangle>>> =
    LazyLock::new(|| Mutex::new(BTreeMap::new()));

fn with_first_kind<R>(f: impl FnOnce(&mut Stirling1Triangle) -> R) -> R {
    let mut guard = FIRST_KIND.lock().unwrap_or_else(PoisonError::into_inner);
    f(&mut guard)
}

fn with_r_triangle<R>(r: usize, f: impl FnOnce(&mut RStirlingTriangle) -> R) -> R {
    let mut guard = SECOND_KIND.lock().unwrap_or_else(PoisonError::into_inner);
    f(guard.entry(r).or_insert_with(|| RStirlingTriangle::new(r)))
}

/// Signed Stirling number of the first kind; zero outside `0 <= k <= n`.
pub fn stirling1(n: usize, k: i64) -> BigInt {
    with_first_kind(|t| t.get(n, k))
}

/// `s(n, 0..=n)`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    with_first_kind(|t| t.row(n).to_vec())
}

/// Stirling number of the second kind `{n k}`; zero outside `0 <= k <= n`.
pub fn stirling2(n: usize, k: i64) -> BigInt {
    r_stirling2(0, n, k)
}

pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    r_stirling2_row(0, n)
}

/// r-Stirling number `{n k}_r`; zero when `n < r` or `k` is out of range.
pub fn r_stirling2(r: usize, n: usize, k: i64) -> BigInt {
    with_r_triangle(r, |t| t.get(n, k))
}

/// `{n 0..=n}_r`.
pub fn r_stirling2_row(r: usize, n: usize) -> Vec<BigInt> {
    with_r_triangle(r, |t| t.row(n))
}

/// Check `{n+r k+r}_r = {n+r k+r}_{r-1} - (r-1) {n+r-1 k+r}_{r-1}` over
/// `0 <= n <= n_max`, `0 <= k <= k_max`.
pub fn verify_tig_identity(r: usize, n_max: usize, k_max: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "r-Stirling shift identity needs r >= 1".into(),
        ));
    }
    let mut upper = RStirlingTriangle::new(r);
    let mut lower = RStirlingTriangle::new(r - 1);
    for n in 0..=n_max {
        for k in 0..=k_max {
            let col = (k + r) as i64;
            let lhs = upper.get(n + r, col);
            let rhs = lower.get(n + r, col) - lower.get(n + r - 1, col) * (r - 1);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
