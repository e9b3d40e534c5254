//! Golden matrix blocks shipped with the crate.
//!
//! The CSV files hold the printed blocks verbatim. [`Fixture::regenerate`]
//! rebuilds each one from its generating sequence so callers can diff the
//! two renderings byte for byte.

use num_bigint::BigInt;

use crate::domains::Canonical;
use crate::error::Result;
use crate::sequences;
use crate::transform::{build_from_final, build_from_initial, Construction, SMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub construction: Construction,
    /// Number of printed rows.
    pub rows: usize,
    /// Number of printed columns.
    pub cols: usize,
    pub csv: &'static str,
}

pub const FIBONACCI_INITIAL: Fixture = Fixture {
    name: "fibonacci_initial",
    construction: Construction::Initial,
    rows: 8,
    cols: 7,
    csv: include_str!("../fixtures/fibonacci_initial.csv"),
};

pub const SIGNED_DERANGEMENTS_INITIAL: Fixture = Fixture {
    name: "signed_derangements_initial",
    construction: Construction::Initial,
    rows: 6,
    cols: 6,
    csv: include_str!("../fixtures/signed_derangements_initial.csv"),
};

pub const CATALAN_FINAL: Fixture = Fixture {
    name: "catalan_final",
    construction: Construction::Final,
    rows: 7,
    cols: 8,
    csv: include_str!("../fixtures/catalan_final.csv"),
};

/// Initial sequence `R_{m+1}`, where `R` is the inverse transform of Catalan.
pub const R_SHIFTED_INITIAL: Fixture = Fixture {
    name: "r_shifted_initial",
    construction: Construction::Initial,
    rows: 7,
    cols: 8,
    csv: include_str!("../fixtures/r_shifted_initial.csv"),
};

pub const ALL: [Fixture; 4] = [
    FIBONACCI_INITIAL,
    SIGNED_DERANGEMENTS_INITIAL,
    CATALAN_FINAL,
    R_SHIFTED_INITIAL,
];

impl Fixture {
    /// Terms of the generating sequence needed for the block.
    pub fn source_len(&self) -> usize {
        self.rows + self.cols - 1
    }

    /// The generating sequence (row 0 or column 0, depending on construction).
    pub fn source(&self) -> Result<Vec<BigInt>> {
        let len = self.source_len();
        Ok(match self.name {
            "fibonacci_initial" => sequences::fibonacci_initial(len)?,
            "signed_derangements_initial" => sequences::signed_derangements(len),
            "catalan_final" => sequences::catalan(len),
            "r_shifted_initial" => sequences::r_sequence(len + 1).split_off(1),
            other => unreachable!("fixture {other} has no source"),
        })
    }

    /// Rebuild the block from its generating sequence.
    pub fn regenerate(&self) -> Result<SMatrix<BigInt>> {
        let source = self.source()?;
        match self.construction {
            Construction::Initial => build_from_initial(&source, self.rows - 1, self.cols - 1),
            Construction::Final => build_from_final(&source, self.rows - 1, self.cols - 1),
        }
    }

    /// The stored block parsed into integers.
    pub fn expected(&self) -> Result<Vec<Vec<BigInt>>> {
        self.csv
            .lines()
            .map(|line| line.split(',').map(BigInt::parse_canonical).collect())
            .collect()
    }

    /// Whether the regenerated CSV equals the stored file byte for byte.
    pub fn matches(&self) -> Result<bool> {
        Ok(self.regenerate()?.to_csv() == self.csv)
    }
}

pub fn by_name(name: &str) -> Option<Fixture> {
    ALL.into_iter().find(|f| f.name == name)
}
