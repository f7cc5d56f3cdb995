//! Command-line front end for `fh-diagram`: argument definitions, CSV and
//! SVG emitters, and the subcommand implementations behind `fhdiag`.

pub mod args;
pub mod commands;
pub mod csvio;
mod error;
pub mod numfmt;
pub mod svg;

pub use error::{CliError, CliResult};
