//! The transform matrix and the ways to compute with it.
//!
//! * [`build_from_initial`] / [`build_from_final`]: fill a finite block from
//!   row 0 or column 0 with the defining recurrences,
//! * [`stirling_transform`] / [`inverse_stirling_transform`]: the in-place
//!   anti-diagonal sweeps producing the opposite edge,
//! * [`entry_via_theorem1`] / [`entry_via_theorem2`]: closed forms for a single
//!   entry through r-Stirling and first-kind Stirling numbers.
//!
//! Everything here is generic over [`Module`](crate::domains::Module): the
//! recurrences only ever multiply by the column index.

mod algorithms;
mod matrix;
mod record;

pub use algorithms::{
    binomial_transform, entry_via_theorem1, entry_via_theorem2, generalized_identity_sides,
    inverse_binomial_transform, inverse_stirling_transform, stirling_transform,
};
pub use matrix::{build_from_final, build_from_initial, Construction, SMatrix};
pub use record::{SequenceRecord, Values};
