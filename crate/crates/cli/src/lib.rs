//! Command-line front end for the QPA simulator: table verification,
//! protocol runs, leakage estimates and parameter sweeps, emitted as JSON or
//! CSV.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod message;
pub mod output;

pub use args::Cli;
pub use commands::{execute, Outcome};
pub use error::CliError;

/// Embedded in every output artifact.
pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Exit code for a completed command.
pub const EXIT_OK: u8 = 0;
/// Exit code when a verification check fails.
pub const EXIT_FAILED: u8 = 1;
/// Exit code for usage or configuration errors.
pub const EXIT_USAGE: u8 = 2;
