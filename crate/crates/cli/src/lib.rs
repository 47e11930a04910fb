//! Command-line front end for `cayley-core`.
//!
//! Every command returns a [`Outcome`]: the text to print and an exit code
//! (0 when the checked property holds, 1 when it does not, 2 on errors).

pub mod args;
pub mod commands;
pub mod dto;
pub mod parallel;
pub mod svg;

pub use args::Cli;
pub use commands::{run, CliError, Outcome};

/// Library version embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
