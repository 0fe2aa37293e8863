// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Displacement sensing with a geometry-protected Bell state: survival
//! probability of the dark branch, the Bernoulli Fisher information of a
//! single survival measurement, and the Cramér-Rao bound on the minimum
//! resolvable displacement.
//!
//! The decay rate near a node is Γ_df(δd) = Λ₀·(k₀δd)² with Λ₀ taken from
//! the four-mode spectrum ([`crate::pseudomode::lambda0_prefactor`]); a run
//! of duration T_int is a Bernoulli trial with survival probability
//! P_s = exp(−Γ_df·T_int). Detection is assumed projective and
//! shot-noise-limited; no inefficiency or dark counts are modelled.

use crate::{Error, Result};

/// Protocol constants for the survival-probability estimator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensingProtocol {
    /// Interrogation time T_int (s).
    pub t_int: f64,
    /// Number of independent repetitions N.
    pub n_rep: u64,
    /// Dark-state decay prefactor Λ₀ (1/s).
    pub lambda0_prefactor: f64,
    /// Resonant wavenumber k₀ (1/m).
    pub k0: f64,
}

impl SensingProtocol {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("t_int", self.t_int),
            ("lambda0_prefactor", self.lambda0_prefactor),
            ("k0", self.k0),
        ];
        for (name, v) in positive {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::param(name, format!("must be > 0, got {v}")));
            }
        }
        if self.n_rep < 1 {
            return Err(Error::param("n_rep", "must be ≥ 1"));
        }
        Ok(())
    }

    /// Node separation d_node = π/k₀.
    pub fn d_node(&self) -> f64 {
        std::f64::consts::PI / self.k0
    }

    /// Decay rate at displacement δd from the node: Γ = Λ₀·(k₀δd)².
    pub fn decay_rate(&self, delta_d: f64) -> f64 {
        let eps = self.k0 * delta_d;
        self.lambda0_prefactor * eps * eps
    }
}

/// Dark-branch survival probability P_s = exp[−Λ₀·T_int·(k₀δd)²].
pub fn survival_probability(delta_d: f64, proto: &SensingProtocol) -> Result<f64> {
    proto.validate()?;
    if delta_d < 0.0 {
        return Err(Error::param("delta_d", "must be ≥ 0"));
    }
    Ok((-proto.decay_rate(delta_d) * proto.t_int).exp())
}

/// Exact single-shot Bernoulli Fisher information about δd (1/m²):
/// 𝓘₁ = (∂P/∂δd)² / (P(1−P)) with ∂P/∂δd = −2Λ₀T k₀²δd·P.
///
/// At δd → 0 the expression is a removable 0/0 whose limit is the weak-decay
/// constant 4Λ₀k₀²T; displacements below 1e−9·d_node return that limit.
pub fn fisher_single_shot_exact(delta_d: f64, proto: &SensingProtocol) -> Result<f64> {
    proto.validate()?;
    if delta_d < 0.0 {
        return Err(Error::param("delta_d", "must be ≥ 0"));
    }
    if delta_d < 1e-9 * proto.d_node() {
        return fisher_weak_decay(proto);
    }
    let x = proto.decay_rate(delta_d) * proto.t_int; // Γ·T
    let p_s = (-x).exp();
    let one_minus_p = -(-x).exp_m1(); // 1 − e^{−x} without cancellation
    let dp = 2.0 * proto.lambda0_prefactor * proto.t_int * proto.k0 * proto.k0 * delta_d * p_s;
    Ok(dp * dp / (p_s * one_minus_p))
}

/// Weak-decay Fisher information 𝓘₁ ≃ 4Λ₀k₀²T_int, independent of δd.
/// Callers are responsible for the regime check Λ₀T(k₀δd)² ≪ 1.
pub fn fisher_weak_decay(proto: &SensingProtocol) -> Result<f64> {
    proto.validate()?;
    Ok(4.0 * proto.lambda0_prefactor * proto.k0 * proto.k0 * proto.t_int)
}

/// Cramér-Rao minimum resolvable displacement over N repetitions:
/// δd_min = 1/√(N·𝓘₁) = (1/2k₀)·√(1/(Λ₀·T_int·N)).
pub fn crb_min_displacement(proto: &SensingProtocol) -> Result<f64> {
    let fisher = fisher_weak_decay(proto)?;
    Ok(1.0 / (proto.n_rep as f64 * fisher).sqrt())
}
