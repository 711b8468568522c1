use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Args(#[from] clap::Error),

    #[error("invalid value for {key}: expected {expected}, got '{value}'")]
    Config {
        key: String,
        expected: String,
        value: String,
    },

    #[error("unknown configuration key '{0}'")]
    UnknownKey(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] fraciter::Error),

    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn config(key: impl Into<String>, expected: impl Into<String>, value: impl Into<String>) -> Self {
        CliError::Config {
            key: key.into(),
            expected: expected.into(),
            value: value.into(),
        }
    }
}
