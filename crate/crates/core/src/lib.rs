// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Single-excitation dynamics of two qubits coupled to a structured
//! one-dimensional photonic reservoir, with the Bell-nonlocality and
//! information-backflow diagnostics built on top.
//!
//! The crate is organised around two interchangeable pictures of the bath:
//!
//! * [`bath`] — a finite ladder of discrete modes (mirror-terminated guide),
//!   evolved exactly by one Hermitian eigendecomposition; recurrences appear
//!   at the round-trip (Poincaré) time.
//! * [`pseudomode`] — the continuum limit of a Lorentzian bath, reduced to an
//!   exact four-mode linear system whose non-Hermitian spectrum carries the
//!   decay rates and dark-state lifetimes.
//!
//! [`observables`] and [`backflow`] turn either evolution into CHSH values,
//! mutual information, trace distances and the integrated backflow measures;
//! [`sensing`] maps near-node dark-state decay onto displacement-estimation
//! bounds.

pub mod backflow;
pub mod bath;
pub mod linalg;
pub mod observables;
pub mod params;
pub mod pseudomode;
pub mod sensing;

mod error;

pub use error::Error;

pub use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
