//! Exact arithmetic for the generalized Stirling transform.
//!
//! The central object is the matrix `S = (a[n][m])` tied together by
//! `a[n+1][m] = a[n][m+1] + m * a[n][m]`. Its first row is the *initial*
//! sequence and its first column the *final* sequence; the final sequence is
//! the Stirling transform of the initial one. Around that matrix the crate
//! provides:
//!
//! * [`domains`]: exact coefficient types (big integers, rationals, `Q(sqrt d)`,
//!   polynomials over `Q`) behind one arithmetic contract,
//! * [`stirling`]: first/second kind and r-Stirling triangles,
//! * [`transform`]: matrix construction, the in-place transform algorithms and
//!   the closed forms,
//! * [`egf`]: truncated exponential generating functions,
//! * [`sequences`]: generators for the classical sequences used as fixtures,
//! * [`hankel`]: exact determinants and Hankel transforms.

pub mod domains;
pub mod egf;
pub mod error;
pub mod fixtures;
pub mod hankel;
pub mod sequences;
pub mod stirling;
pub mod transform;

pub use domains::{
    Canonical, DomainTag, ExactDivision, Field, Module, QuadraticSurd, Rational, RationalAlgebra,
    RationalPolynomial, Ring, Surd5,
};

pub use egf::TruncatedEgf;
pub use error::{Error, Result};
pub use hankel::{Determinant, SquareMatrix};
pub use num_bigint::BigInt;
pub use stirling::{RStirlingTriangle, Stirling1Triangle};
pub use transform::{Construction, SMatrix, SequenceRecord, Values};
