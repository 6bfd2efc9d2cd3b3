//! Command-line surface for `wqbg-core`: computations, verification suites and
//! a binary cache for groups and quantum Bruhat graphs.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod verify;

pub use commands::{render, run, Cli, Outcome, Output};
pub use config::{Format, RunConfig};
pub use error::{CliError, CliResult};
