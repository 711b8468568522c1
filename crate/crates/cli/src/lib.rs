//! Command-line front end for the `fraciter` solver: configuration
//! parsing, command execution and table output.

pub mod commands;
pub mod config;
pub mod emit;
pub mod error;

pub use commands::{execute, render_report, Report};
pub use config::{parse_config, Command, Format, RunConfig};
pub use error::CliError;

/// Exit status for a finished command.
pub fn exit_code(report: &Report, cfg: &RunConfig) -> i32 {
    if report.all_completed || cfg.allow_partial {
        0
    } else {
        1
    }
}
