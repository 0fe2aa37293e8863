// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for the two-qubit waveguide simulations: structured
//! TOML configs, reference-run pipelines, parameter sweeps and
//! deterministic CSV output.

pub mod config;
pub mod csvout;
pub mod pipeline;

/// Errors split by exit code: config problems exit 2, numerical failures 3.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerical(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Numerical(msg) => write!(f, "numerical failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<bellwave_core::Error> for CliError {
    fn from(e: bellwave_core::Error) -> Self {
        match e {
            bellwave_core::Error::InvalidParameter { .. } | bellwave_core::Error::InvalidGrid(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Numerical(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
