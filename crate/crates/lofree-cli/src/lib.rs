//! Command-line surface for the `lofree` library.
//!
//! The binary (`lofree`) is a thin wrapper over this crate's modules:
//! [`config`] resolves a [`config::RunConfig`] from flags, an optional
//! key-value config file, and environment defaults; [`commands`] implements
//! the five subcommands; [`criteria`] packages the acceptance suite as
//! reusable checks; [`report`] assembles the deterministic report bundle.
//!
//! Everything here is exposed as a library so integration tests can drive
//! the exact code paths the binary uses.

pub mod commands;
pub mod config;
pub mod criteria;
pub mod output;
pub mod report;

pub use config::{CliError, Format, RunConfig};
pub use output::{Cell, Table};

/// Exit codes shared by the binary and the library contract:
/// 0 success, 1 assertion failure (oracle mismatch, failed criterion),
/// 2 usage or configuration error, 3 resource-cap abort.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAP: i32 = 3;
}
