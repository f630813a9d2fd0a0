//! Command-line front end for `qdm_rf`: config parsing, CSV tables and SVG plots.

pub mod commands;
pub mod config;
pub mod error;
pub mod plot;
pub mod tables;

pub use commands::{run_compute, run_plot, Compute, RunOptions};
pub use config::{parse_config, ConfigError, RunConfig};
pub use error::CliError;
