//! Command-line front end for `stirling-kit`.
//!
//! Exit codes: 0 on success, 1 when a checked identity fails, 2 for usage,
//! parse and input errors.

pub mod args;
pub mod commands;
pub mod error;
pub mod file;
pub mod report;
pub mod suites;

pub use args::Cli;
pub use commands::{run, Output, Status};
pub use error::{CliError, CliResult};
pub use file::{MatrixFile, SequenceFile};
pub use report::{CheckReport, CheckRow};
