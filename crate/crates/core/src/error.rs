// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors produced by model construction, evolution and observables.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A physical parameter violated its domain (non-positive rate, etc.).
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// An input state or matrix violated a structural precondition.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A time grid or series was malformed (unsorted, too short, ...).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// An eigensolve failed to converge or exceeded its residual budget.
    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    /// Evaluation too close to a pole or a measure-zero degeneracy.
    #[error("singular evaluation point: {0}")]
    Singular(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
