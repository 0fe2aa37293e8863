// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Two-qubit correlation measures for the single-excitation sector: the
//! reduced density matrix, maximal CHSH value (closed form and the general
//! Horodecki criterion), quantum mutual information and trace distance.
//!
//! In this sector the reduced state is an X-form matrix with at most two
//! non-zero eigenvalues {P₁+P₂, 1−P₁−P₂}, which is what makes the closed
//! forms possible.

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg;
use crate::{Error, Result};

/// Tsirelson bound 2√2, the quantum maximum of the CHSH parameter.
pub const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Reduced two-qubit density matrix in the basis {|ee⟩, |eg⟩, |ge⟩, |gg⟩},
/// with the populations and relative phase cached.
#[derive(Debug, Clone)]
pub struct ReducedDensityMatrix {
    pub matrix: Array2<Complex64>,
    /// P₁ = |α₁|².
    pub p1: f64,
    /// P₂ = |α₂|².
    pub p2: f64,
    /// Relative phase φ = arg(α₂ α₁*).
    pub phi: f64,
}

impl ReducedDensityMatrix {
    /// Bath occupation 1 − P₁ − P₂.
    pub fn bath_population(&self) -> f64 {
        1.0 - self.p1 - self.p2
    }
}

/// Trace over the bath of the single-excitation pure state with qubit
/// amplitudes (α₁, α₂): an X-form 4×4 with ρ_ee = 0.
pub fn reduced_density(alpha1: Complex64, alpha2: Complex64) -> Result<ReducedDensityMatrix> {
    let p1 = alpha1.norm_sqr();
    let p2 = alpha2.norm_sqr();
    let total = p1 + p2;
    if total > 1.0 + 1e-10 {
        return Err(Error::InvalidState(format!(
            "qubit populations exceed unity: |α₁|²+|α₂|² = {total}"
        )));
    }
    let mut m = Array2::zeros((4, 4));
    m[[1, 1]] = Complex64::new(p1, 0.0);
    m[[2, 2]] = Complex64::new(p2, 0.0);
    m[[1, 2]] = alpha1 * alpha2.conj();
    m[[2, 1]] = alpha2 * alpha1.conj();
    m[[3, 3]] = Complex64::new((1.0 - total).max(0.0), 0.0);
    Ok(ReducedDensityMatrix {
        matrix: m,
        p1,
        p2,
        phi: (alpha2 * alpha1.conj()).arg(),
    })
}

/// Maximal CHSH value from the closed form for the single-excitation X state:
/// S = 2√(u₁ + max(u₁, u₃)) with u₁ = 4P₁P₂ and u₃ = (1−2P₁−2P₂)².
///
/// Independent of the relative phase, because the two in-plane correlation
/// eigenvalues coincide (u₂ = u₁).
pub fn chsh_closed(p1: f64, p2: f64) -> Result<f64> {
    check_population_domain(p1, p2)?;
    let u1 = 4.0 * p1 * p2;
    let u3 = (1.0 - 2.0 * p1 - 2.0 * p2).powi(2);
    Ok(2.0 * (u1 + u1.max(u3)).sqrt())
}

/// Pauli correlation matrix T_ij = Tr[ρ σ_i ⊗ σ_j].
pub fn correlation_matrix(rho: &Array2<Complex64>) -> [[f64; 3]; 3] {
    let paulis = pauli_matrices();
    let mut t = [[0.0; 3]; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, sj) in paulis.iter().enumerate() {
            // Tr[ρ (σ_i ⊗ σ_j)] without materialising the Kronecker product.
            let mut acc = Complex64::default();
            for a in 0..2 {
                for b in 0..2 {
                    for c in 0..2 {
                        for d in 0..2 {
                            acc += rho[[2 * a + b, 2 * c + d]].conj() * si[[a, c]] * sj[[b, d]];
                        }
                    }
                }
            }
            // ρ is Hermitian so the trace is real; conj(ρ_{rc}) pairs with
            // row-major iteration over (σ_i ⊗ σ_j) entries.
            t[i][j] = acc.re;
        }
    }
    t
}

/// Maximal CHSH value of an arbitrary two-qubit state via the Horodecki
/// criterion: 2√(u₁+u₂) with u₁ ≥ u₂ the largest eigenvalues of TᵀT.
pub fn chsh_horodecki(rho: &Array2<Complex64>) -> Result<f64> {
    validate_density_matrix(rho)?;
    let t = correlation_matrix(rho);
    let mut u = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            u[i][j] = (0..3).map(|k| t[k][i] * t[k][j]).sum();
        }
    }
    let eig = linalg::sym3_eigenvalues(&u);
    Ok(2.0 * (eig[0] + eig[1]).max(0.0).sqrt())
}

/// Binary entropy h(x) = −x·log₂x − (1−x)·log₂(1−x), with h(0) = h(1) = 0 by
/// continuity. Arguments are clamped to [0, 1] within 1e−12 to absorb
/// floating-point drift from the evolution.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&x) {
        return Err(Error::InvalidState(format!("entropy argument {x} outside [0,1]")));
    }
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// Quantum mutual information of the single-excitation state in bits:
/// I(A:B) = h(P₁) + h(P₂) − h(P₁+P₂). Phase-independent; ranges over [0, 2].
pub fn qmi(p1: f64, p2: f64) -> Result<f64> {
    check_population_domain(p1, p2)?;
    Ok(binary_entropy(p1)? + binary_entropy(p2)? - binary_entropy(p1 + p2)?)
}

/// Trace distance D = ½‖ρ₁ − ρ₂‖₁ between two density matrices, from the
/// eigenvalues of the Hermitian difference.
pub fn trace_distance(rho1: &Array2<Complex64>, rho2: &Array2<Complex64>) -> Result<f64> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::InvalidState(format!(
            "dimension mismatch: {:?} vs {:?}",
            rho1.dim(),
            rho2.dim()
        )));
    }
    let diff = rho1 - rho2;
    let eig = linalg::hermitian_eigen(&diff)?;
    Ok(0.5 * eig.vals.iter().map(|v| v.abs()).sum::<f64>())
}

/// Closed-form trace distance 2|s||a| between the trajectory of |eg⟩ and its
/// qubit-swapped mirror, in terms of the collective amplitudes.
pub fn trace_distance_closed(s: Complex64, a: Complex64) -> f64 {
    2.0 * s.norm() * a.norm()
}

fn check_population_domain(p1: f64, p2: f64) -> Result<()> {
    let tol = 1e-10;
    if p1 < -tol || p2 < -tol || p1 + p2 > 1.0 + tol {
        return Err(Error::InvalidState(format!(
            "populations outside the single-excitation domain: P₁={p1}, P₂={p2}"
        )));
    }
    Ok(())
}

/// Hermitian, unit-trace, PSD check (eigenvalues ≥ −1e−12).
fn validate_density_matrix(rho: &Array2<Complex64>) -> Result<()> {
    if rho.nrows() != 4 || rho.ncols() != 4 {
        return Err(Error::InvalidState(format!(
            "expected a 4×4 density matrix, got {:?}",
            rho.dim()
        )));
    }
    if linalg::hermiticity_defect(rho) > 1e-10 {
        return Err(Error::InvalidState("density matrix not Hermitian".into()));
    }
    let trace: Complex64 = (0..4).map(|i| rho[[i, i]]).sum();
    if (trace.re - 1.0).abs() > 1e-8 || trace.im.abs() > 1e-10 {
        return Err(Error::InvalidState(format!("trace {trace} ≠ 1")));
    }
    let eig = linalg::hermitian_eigen(rho)?;
    if eig.vals.iter().any(|&v| v < -1e-12) {
        return Err(Error::InvalidState(format!(
            "density matrix not PSD: min eigenvalue {:.3e}",
            eig.vals[0]
        )));
    }
    Ok(())
}

fn pauli_matrices() -> [Array2<Complex64>; 3] {
    let mut sx = Array2::zeros((2, 2));
    sx[[0, 1]] = Complex64::new(1.0, 0.0);
    sx[[1, 0]] = Complex64::new(1.0, 0.0);
    let mut sy = Array2::zeros((2, 2));
    sy[[0, 1]] = Complex64::new(0.0, -1.0);
    sy[[1, 0]] = Complex64::new(0.0, 1.0);
    let mut sz = Array2::zeros((2, 2));
    sz[[0, 0]] = Complex64::new(1.0, 0.0);
    sz[[1, 1]] = Complex64::new(-1.0, 0.0);
    [sx, sy, sz]
}
