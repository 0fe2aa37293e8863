// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Physical parameters of the two-qubit/waveguide model and the handful of
//! derived constants every other module consumes.
//!
//! All frequencies and rates are stored in rad/s; lengths in metres. Callers
//! working in dimensionless units simply pass `omega0 = 1`, `v = 1` — every
//! formula in the crate is scale-covariant.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::{Error, Result};

/// Physical parameters: qubit frequency, bath coupling and spectrum, exchange
/// coupling, geometry and group velocity.
///
/// Qubits sit at `±d`, so the separation is `2d`. `j_exchange` is the
/// coherent qubit-qubit exchange and may take either sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Qubit angular frequency ω₀ (rad/s).
    pub omega0: f64,
    /// On-resonance system-bath coupling strength γ (rad/s).
    pub gamma: f64,
    /// Lorentzian spectral half-width λ (rad/s).
    pub lambda: f64,
    /// Coherent exchange coupling J (rad/s, signed).
    pub j_exchange: f64,
    /// Qubit half-separation d (m); qubits at ±d.
    pub d: f64,
    /// Group velocity v (m/s).
    pub v: f64,
}

/// Constants derived from [`PhysicalParams`]: resonant wavenumber and
/// wavelength, continuum coupling amplitude and the complex pseudomode rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// Resonant wavenumber k₀ = ω₀/v (1/m).
    pub k0: f64,
    /// Resonant wavelength λ₀ = 2π/k₀ (m).
    pub lambda0: f64,
    /// Continuum coupling amplitude g = √(γλ/2) (rad/s).
    pub g: f64,
    /// Complex pseudomode rate λ̃ = λ − iω₀ (rad/s).
    pub lambda_tilde: Complex64,
}

impl PhysicalParams {
    /// Validate the parameter domain: ω₀, γ, λ, v strictly positive.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("omega0", self.omega0),
            ("gamma", self.gamma),
            ("lambda", self.lambda),
            ("v", self.v),
        ];
        for (name, value) in positive {
            if value <= 0.0 || !value.is_finite() {
                return Err(Error::param(name, format!("must be > 0, got {value}")));
            }
        }
        if !self.j_exchange.is_finite() || !self.d.is_finite() {
            return Err(Error::param("j_exchange/d", "must be finite"));
        }
        Ok(())
    }

    /// Resonant wavenumber k₀ = ω₀/v.
    pub fn k0(&self) -> f64 {
        self.omega0 / self.v
    }

    /// Resonant wavelength λ₀ = 2π v/ω₀.
    pub fn lambda0(&self) -> f64 {
        2.0 * PI / self.k0()
    }

    /// Continuum coupling amplitude g = √(γλ/2).
    pub fn g(&self) -> f64 {
        (self.gamma * self.lambda / 2.0).sqrt()
    }

    /// Complex pseudomode rate λ̃ = λ − iω₀.
    pub fn lambda_tilde(&self) -> Complex64 {
        Complex64::new(self.lambda, -self.omega0)
    }

    /// Geometric phase k₀d accumulated over the half-separation.
    pub fn phase(&self) -> f64 {
        self.k0() * self.d
    }

    /// Copy of these parameters with a different half-separation.
    pub fn with_d(&self, d: f64) -> Self {
        Self { d, ..*self }
    }
}

/// Compute all derived constants, validating the inputs first.
pub fn derive_constants(params: &PhysicalParams) -> Result<DerivedConstants> {
    params.validate()?;
    Ok(DerivedConstants {
        k0: params.k0(),
        lambda0: params.lambda0(),
        g: params.g(),
        lambda_tilde: params.lambda_tilde(),
    })
}

/// Collective (symmetric/antisymmetric) qubit amplitudes.
///
/// The map (α₁, α₂) ↦ (s, a) is unitary, so |s|² + |a|² = |α₁|² + |α₂|²
/// exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveAmplitudes {
    pub s: Complex64,
    pub a: Complex64,
}

/// Transform bare qubit amplitudes to the collective basis:
/// s = (α₁+α₂)/√2, a = (α₁−α₂)/√2.
pub fn to_collective(alpha1: Complex64, alpha2: Complex64) -> CollectiveAmplitudes {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    CollectiveAmplitudes {
        s: (alpha1 + alpha2) * inv_sqrt2,
        a: (alpha1 - alpha2) * inv_sqrt2,
    }
}

/// Inverse of [`to_collective`]: α₁ = (s+a)/√2, α₂ = (s−a)/√2.
pub fn from_collective(c: CollectiveAmplitudes) -> (Complex64, Complex64) {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    ((c.s + c.a) * inv_sqrt2, (c.s - c.a) * inv_sqrt2)
}

/// Lorentzian spectral density J_L(ω) = γλ² / ((ω−ω₀)² + λ²).
///
/// Peaks at γ on resonance and reaches γ/2 at ω = ω₀ ± λ.
pub fn lorentzian_density(omega: f64, params: &PhysicalParams) -> f64 {
    let detuning = omega - params.omega0;
    params.gamma * params.lambda * params.lambda / (detuning * detuning + params.lambda * params.lambda)
}
