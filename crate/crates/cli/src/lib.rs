//! Command-line front end: file formats, generators and the `hgdual`
//! subcommands.

pub mod commands;
pub mod format;
pub mod generate;

pub use commands::{run, run_from_args, Cli, Outcome};
