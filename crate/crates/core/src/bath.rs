// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Finite discrete-mode reservoir: a uniform ladder of bosonic modes sampled
//! from the Lorentzian density, the single-excitation Hamiltonian it induces,
//! and exact evolution by one Hermitian eigendecomposition.
//!
//! The ladder is equivalent to a mirror-terminated guide of length
//! L = πv/δω; every mode phase realigns after the round trip T_P = 2π/δω,
//! which is where the revivals come from.
//!
//! Amplitudes are stored in the frame rotating at ω₀ (the carrier is removed
//! by shifting the Hamiltonian diagonal), so populations and relative phases
//! are envelope-smooth on the grid.

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::{self, HermitianEigen};
use crate::params::{lorentzian_density, PhysicalParams};
use crate::{Error, Result};

/// Specification of the discrete mode ladder.
#[derive(Debug, Clone, Copy)]
pub struct DiscreteBathSpec {
    /// Number of modes N_m (≥ 1).
    pub n_modes: usize,
    /// Frequency half-window around ω₀ (rad/s); the ladder spans ω₀ ± span.
    pub span: f64,
    /// Use the resonant-phase approximation e^{±ik₀d} (uniform across modes)
    /// instead of the exact per-mode phases e^{±ik·d}.
    pub use_k0_phase: bool,
    /// Coupling override for the degenerate single-mode ladder (rad/s).
    /// Required when `n_modes == 1`, where the spacing δω is undefined.
    pub single_mode_coupling: Option<f64>,
}

impl DiscreteBathSpec {
    /// Uniform ladder with the resonant-phase convention.
    pub fn new(n_modes: usize, span: f64) -> Self {
        Self {
            n_modes,
            span,
            use_k0_phase: true,
            single_mode_coupling: None,
        }
    }

    /// Mode spacing δω = 2·span/(N_m − 1).
    pub fn mode_spacing(&self) -> Result<f64> {
        if self.n_modes < 2 {
            return Err(Error::param("n_modes", "spacing undefined for n_modes < 2"));
        }
        Ok(2.0 * self.span / (self.n_modes as f64 - 1.0))
    }
}

/// The sampled bath: mode frequencies, coupling magnitudes and the per-qubit
/// coupling phase factors.
#[derive(Debug, Clone)]
pub struct BathModes {
    /// Mode frequencies ω_k (rad/s).
    pub omegas: Vec<f64>,
    /// Coupling magnitudes |g_k| (rad/s), from |g_k|² = J_L(ω_k)·δω/(2π).
    pub g_abs: Vec<f64>,
    /// Phase factor of qubit 1's coupling for each mode.
    pub phase1: Vec<Complex64>,
    /// Phase factor of qubit 2's coupling for each mode.
    pub phase2: Vec<Complex64>,
}

impl BathModes {
    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    /// Full complex coupling of qubit `j` (0 or 1) to mode `k`.
    pub fn coupling(&self, j: usize, k: usize) -> Complex64 {
        let phase = if j == 0 { self.phase1[k] } else { self.phase2[k] };
        phase * self.g_abs[k]
    }
}

/// State in the single-excitation sector: two qubit amplitudes plus one
/// amplitude per bath mode. Norm 1 under unitary evolution.
#[derive(Debug, Clone)]
pub struct SingleExcitationState {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub betas: Vec<Complex64>,
}

impl SingleExcitationState {
    /// |eg⟩: excitation on qubit 1, bath empty.
    pub fn excited_qubit1(n_modes: usize) -> Self {
        Self {
            alpha1: Complex64::new(1.0, 0.0),
            alpha2: Complex64::default(),
            betas: vec![Complex64::default(); n_modes],
        }
    }

    /// |ge⟩: excitation on qubit 2, bath empty.
    pub fn excited_qubit2(n_modes: usize) -> Self {
        Self {
            alpha1: Complex64::default(),
            alpha2: Complex64::new(1.0, 0.0),
            betas: vec![Complex64::default(); n_modes],
        }
    }

    /// Total norm² = |α₁|² + |α₂|² + Σ|β_k|².
    pub fn norm_sqr(&self) -> f64 {
        self.alpha1.norm_sqr()
            + self.alpha2.norm_sqr()
            + self.betas.iter().map(|b| b.norm_sqr()).sum::<f64>()
    }

    /// Bath occupation Σ|β_k|².
    pub fn bath_population(&self) -> f64 {
        self.betas.iter().map(|b| b.norm_sqr()).sum()
    }

    fn to_vec(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(2 + self.betas.len());
        v.push(self.alpha1);
        v.push(self.alpha2);
        v.extend_from_slice(&self.betas);
        v
    }
}

/// Build the uniform mode ladder for the given spectrum and geometry.
///
/// The discretisation rule |g_k|² = J_L(ω_k)·δω/(2π) is the unique uniform
/// sampling whose continuum limit reproduces the exponential memory kernel
/// with g² = γλ/2.
pub fn build_modes(params: &PhysicalParams, spec: &DiscreteBathSpec) -> Result<BathModes> {
    params.validate()?;
    if spec.n_modes == 0 {
        return Err(Error::param("n_modes", "must be ≥ 1"));
    }
    if spec.span <= 0.0 || !spec.span.is_finite() {
        return Err(Error::param("span", format!("must be > 0, got {}", spec.span)));
    }

    let k0d = params.phase();
    let (omegas, g_abs): (Vec<f64>, Vec<f64>) = if spec.n_modes == 1 {
        let g = spec.single_mode_coupling.ok_or_else(|| {
            Error::param(
                "single_mode_coupling",
                "required for the degenerate n_modes = 1 ladder",
            )
        })?;
        (vec![params.omega0], vec![g])
    } else {
        let delta = spec.mode_spacing()?;
        let half = (spec.n_modes as f64 - 1.0) / 2.0;
        (0..spec.n_modes)
            .map(|k| {
                let omega = params.omega0 + (k as f64 - half) * delta;
                let g2 = lorentzian_density(omega, params) * delta / (2.0 * std::f64::consts::PI);
                (omega, g2.sqrt())
            })
            .unzip()
    };

    let (phase1, phase2): (Vec<Complex64>, Vec<Complex64>) = omegas
        .iter()
        .map(|&omega| {
            let kd = if spec.use_k0_phase { k0d } else { omega / params.v * params.d };
            (
                Complex64::from_polar(1.0, kd),
                Complex64::from_polar(1.0, -kd),
            )
        })
        .unzip();

    Ok(BathModes {
        omegas,
        g_abs,
        phase1,
        phase2,
    })
}

/// Assemble the single-excitation Hamiltonian in the rotating frame of ω₀,
/// basis {|eg⟩, |ge⟩, |1_k⟩…}: qubit diagonal 0, exchange J, mode diagonal
/// ω_k − ω₀, couplings ⟨1_k|H|e_j⟩ = g_k^{(j)}. Hermitian by construction.
pub fn assemble_hamiltonian(params: &PhysicalParams, modes: &BathModes) -> Array2<Complex64> {
    let n = modes.len();
    let dim = 2 + n;
    let mut h = Array2::zeros((dim, dim));
    h[[0, 1]] = Complex64::new(params.j_exchange, 0.0);
    h[[1, 0]] = Complex64::new(params.j_exchange, 0.0);
    for k in 0..n {
        h[[2 + k, 2 + k]] = Complex64::new(modes.omegas[k] - params.omega0, 0.0);
        for j in 0..2 {
            let g = modes.coupling(j, k);
            h[[2 + k, j]] = g;
            h[[j, 2 + k]] = g.conj();
        }
    }
    h
}

/// Exact evolution of the single-excitation sector over a time grid, from one
/// spectral decomposition of the Hermitian Hamiltonian.
#[derive(Debug, Clone)]
pub struct BathPropagator {
    eigen: HermitianEigen,
    dim: usize,
}

impl BathPropagator {
    /// Diagonalise the Hamiltonian once; reusable for any initial state.
    pub fn new(hamiltonian: &Array2<Complex64>) -> Result<Self> {
        let defect = linalg::hermiticity_defect(hamiltonian);
        let scale = linalg::fro_norm(hamiltonian).max(f64::MIN_POSITIVE);
        if defect > 1e-12 * scale {
            return Err(Error::Eigen(format!(
                "Hamiltonian not Hermitian: defect {defect:.3e} at scale {scale:.3e}"
            )));
        }
        let dim = hamiltonian.nrows();
        let eigen = linalg::hermitian_eigen(hamiltonian)?;
        Ok(Self { eigen, dim })
    }

    /// ψ(t) = V e^{−iEt} V† ψ₀ for every grid time.
    pub fn evolve(
        &self,
        psi0: &SingleExcitationState,
        times: &[f64],
    ) -> Result<Vec<SingleExcitationState>> {
        if 2 + psi0.betas.len() != self.dim {
            return Err(Error::InvalidState(format!(
                "state dimension {} does not match Hamiltonian dimension {}",
                2 + psi0.betas.len(),
                self.dim
            )));
        }
        let norm = psi0.norm_sqr();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::InvalidState(format!(
                "initial state not normalised: ‖ψ₀‖² = {norm}"
            )));
        }
        validate_time_grid(times)?;

        let v = &self.eigen.vecs;
        let psi_vec = psi0.to_vec();
        // Coefficients in the eigenbasis: c = V† ψ₀.
        let coeffs: Vec<Complex64> = (0..self.dim)
            .map(|m| (0..self.dim).map(|r| v[[r, m]].conj() * psi_vec[r]).sum())
            .collect();

        let mut out = Vec::with_capacity(times.len());
        let mut phased = vec![Complex64::default(); self.dim];
        for &t in times {
            for m in 0..self.dim {
                phased[m] = coeffs[m] * Complex64::from_polar(1.0, -self.eigen.vals[m] * t);
            }
            let mut alpha1 = Complex64::default();
            let mut alpha2 = Complex64::default();
            let mut betas = vec![Complex64::default(); self.dim - 2];
            for (m, &c) in phased.iter().enumerate() {
                alpha1 += v[[0, m]] * c;
                alpha2 += v[[1, m]] * c;
                for (k, beta) in betas.iter_mut().enumerate() {
                    *beta += v[[2 + k, m]] * c;
                }
            }
            out.push(SingleExcitationState {
                alpha1,
                alpha2,
                betas,
            });
        }
        Ok(out)
    }
}

/// Convenience wrapper: diagonalise and evolve in one call.
pub fn evolve(
    hamiltonian: &Array2<Complex64>,
    psi0: &SingleExcitationState,
    times: &[f64],
) -> Result<Vec<SingleExcitationState>> {
    BathPropagator::new(hamiltonian)?.evolve(psi0, times)
}

/// Poincaré recurrence time T_P = 2π/δω of the uniform ladder.
pub fn poincare_time(spec: &DiscreteBathSpec) -> Result<f64> {
    Ok(2.0 * std::f64::consts::PI / spec.mode_spacing()?)
}

/// Discrete bath correlation function Σ_k |g_k|² e^{−i(ω_k−ω₀)t}; converges
/// to the continuum kernel (γλ/2)e^{−λ|t|} as the ladder refines.
pub fn bath_correlation(modes: &BathModes, omega0: f64, t: f64) -> Complex64 {
    modes
        .omegas
        .iter()
        .zip(&modes.g_abs)
        .map(|(&w, &g)| Complex64::from_polar(g * g, -(w - omega0) * t))
        .sum()
}

pub(crate) fn validate_time_grid(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::InvalidGrid("empty time grid".into()));
    }
    if times[0] < 0.0 {
        return Err(Error::InvalidGrid("times must be non-negative".into()));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("times must be strictly increasing".into()));
    }
    Ok(())
}

/// Uniform grid of `n` samples over [0, t_max].
pub fn time_grid(t_max: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| t_max * i as f64 / (n - 1).max(1) as f64).collect()
}
