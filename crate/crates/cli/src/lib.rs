//! Command-line front end for `lts-core`: file formats and subcommands.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, Outcome};
