use std::fmt::Write as _;

use crate::domains::Module;
use crate::error::{Error, Result};

/// Which edge of the matrix the data was supplied on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Row 0 given; rows below follow `a[n+1][m] = a[n][m+1] + m a[n][m]`.
    Initial,
    /// Column 0 given; columns to the right follow `a[n][m+1] = a[n+1][m] - m a[n][m]`.
    Final,
}

/// Finite `(N+1) x (M+1)` block of the transform matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrix<T> {
    entries: Vec<Vec<T>>,
    built_from: Construction,
    source: Vec<T>,
}

fn required_terms(max_row: usize, max_col: usize) -> Result<usize> {
    max_row
        .checked_add(max_col)
        .and_then(|s| s.checked_add(1))
        .filter(|&s| isize::try_from(s).is_ok())
        .ok_or_else(|| {
            Error::InvalidArgument(format!("matrix size {max_row} x {max_col} is too large"))
        })
}

fn check_length(what: &'static str, required: usize, actual: usize) -> Result<()> {
    if actual < required {
        Err(Error::InsufficientLength {
            what,
            required,
            actual,
        })
    } else {
        Ok(())
    }
}

/// Build rows `0..=max_row`, columns `0..=max_col` from the initial sequence.
///
/// Entry `a[n][m]` depends on `initial[0..=n+m]`, so `max_row + max_col + 1`
/// initial terms are needed.
pub fn build_from_initial<T: Module>(
    initial: &[T],
    max_row: usize,
    max_col: usize,
) -> Result<SMatrix<T>> {
    let needed = required_terms(max_row, max_col)?;
    check_length("matrix from initial sequence", needed, initial.len())?;

    let mut row: Vec<T> = initial[..needed].to_vec();
    let mut entries = Vec::with_capacity(max_row + 1);
    for _ in 0..max_row {
        let next: Vec<T> = row
            .windows(2)
            .enumerate()
            .map(|(m, pair)| pair[1].plus(&pair[0].scale(m as i64)))
            .collect();
        entries.push(row[..=max_col].to_vec());
        row = next;
    }
    entries.push(row[..=max_col].to_vec());

    Ok(SMatrix {
        entries,
        built_from: Construction::Initial,
        source: initial[..needed].to_vec(),
    })
}

/// Build rows `0..=max_row`, columns `0..=max_col` from the final sequence.
pub fn build_from_final<T: Module>(
    final_seq: &[T],
    max_row: usize,
    max_col: usize,
) -> Result<SMatrix<T>> {
    let needed = required_terms(max_row, max_col)?;
    check_length("matrix from final sequence", needed, final_seq.len())?;

    let mut column: Vec<T> = final_seq[..needed].to_vec();
    let mut columns = Vec::with_capacity(max_col + 1);
    for m in 0..max_col {
        let next: Vec<T> = column
            .windows(2)
            .map(|pair| pair[1].minus(&pair[0].scale(m as i64)))
            .collect();
        columns.push(column);
        column = next;
    }
    columns.push(column);

    let entries = (0..=max_row)
        .map(|n| columns.iter().map(|c| c[n].clone()).collect())
        .collect();
    Ok(SMatrix {
        entries,
        built_from: Construction::Final,
        source: final_seq[..needed].to_vec(),
    })
}

impl<T: Module> SMatrix<T> {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, n: usize, m: usize) -> &T {
        &self.entries[n][m]
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.entries[n]
    }

    pub fn column(&self, m: usize) -> Vec<T> {
        self.entries.iter().map(|r| r[m].clone()).collect()
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn built_from(&self) -> Construction {
        self.built_from
    }

    /// The prefix of the generating sequence the block was built from.
    pub fn source(&self) -> &[T] {
        &self.source
    }

    /// Top-left `size x size` block, row-major.
    pub fn leading_block(&self, size: usize) -> Vec<Vec<T>> {
        self.entries[..size]
            .iter()
            .map(|r| r[..size].to_vec())
            .collect()
    }

    /// Whether every adjacent pair obeys `a[n+1][m] = a[n][m+1] + m a[n][m]`.
    ///
    /// Both constructions must satisfy this; the final-column recurrence is
    /// the same relation solved for `a[n][m+1]`.
    pub fn satisfies_recurrence(&self) -> bool {
        (0..self.rows() - 1).all(|n| {
            (0..self.cols() - 1).all(|m| {
                self.entries[n + 1][m]
                    == self.entries[n][m + 1].plus(&self.entries[n][m].scale(m as i64))
            })
        })
    }

    /// Comma-separated rows, one per line, each line newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    /// Right-aligned columns separated by two spaces.
    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols())
            .map(|m| cells.iter().map(|r| r[m].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  "));
        }
        out
    }
}
