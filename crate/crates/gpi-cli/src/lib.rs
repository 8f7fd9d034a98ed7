//! Command-line front end: job configuration, execution and table output.

pub mod config;
pub mod table;
mod tasks;

pub use config::{parse_assignment, parse_settings, JobConfig, SchemeSpec, Settings, Task};
pub use table::{render, Format, Table, Value};
pub use tasks::run;

use gpi::GpiError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] GpiError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    /// 3 for a degenerate parametrization, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(GpiError::DegenerateParametrization { .. }) => 3,
            _ => 2,
        }
    }
}
