// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense complex linear algebra: a cyclic Jacobi eigensolver for
//! Hermitian matrices, closed-form symmetric 3×3 eigenvalues, pivoted
//! elimination helpers and stable quadratic/cubic root finders.
//!
//! Everything here is deterministic — no randomized pivoting, no
//! thread-dependent reductions — so identical inputs give bit-identical
//! output, which the CSV layer relies on.

use ndarray::Array2;
use num_complex::Complex64;

use crate::{Error, Result};

const MAX_JACOBI_SWEEPS: usize = 60;

/// Eigendecomposition of a Hermitian matrix: `a = vecs · diag(vals) · vecs†`
/// with real eigenvalues sorted ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub vals: Vec<f64>,
    pub vecs: Array2<Complex64>,
}

/// Frobenius norm.
pub fn fro_norm(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Conjugate transpose.
pub fn dagger(a: &Array2<Complex64>) -> Array2<Complex64> {
    let (n, m) = a.dim();
    Array2::from_shape_fn((m, n), |(i, j)| a[[j, i]].conj())
}

/// Largest absolute deviation from Hermiticity, max|A − A†|.
pub fn hermiticity_defect(a: &Array2<Complex64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((a[[i, j]] - a[[j, i]].conj()).norm());
        }
    }
    worst
}

/// Cyclic Jacobi eigensolver for a Hermitian matrix.
///
/// Converges to off-diagonal mass below `1e-14·‖A‖_F`; errors out with the
/// residual if the sweep cap is hit (does not happen for Hermitian input).
pub fn hermitian_eigen(a: &Array2<Complex64>) -> Result<HermitianEigen> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Eigen(format!("matrix not square: {:?}", a.dim())));
    }
    let scale = fro_norm(a);
    if scale == 0.0 {
        return Ok(HermitianEigen {
            vals: vec![0.0; n],
            vecs: Array2::eye(n),
        });
    }

    let mut m = a.clone();
    let mut v: Array2<Complex64> = Array2::eye(n);
    let tol = 1e-14 * scale;

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let off = off_diag_norm(&m);
        if off <= tol {
            return Ok(finish_hermitian(m, v));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate_pair(&mut m, &mut v, p, q);
            }
        }
    }
    Err(Error::Eigen(format!(
        "Jacobi failed to converge in {MAX_JACOBI_SWEEPS} sweeps \
         (off-diagonal {:.3e}, scale {:.3e}; input Hermiticity defect {:.3e})",
        off_diag_norm(&m),
        scale,
        hermiticity_defect(a),
    )))
}

fn off_diag_norm(m: &Array2<Complex64>) -> f64 {
    let n = m.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[[i, j]].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One complex Jacobi rotation annihilating the (p,q) entry.
fn rotate_pair(m: &mut Array2<Complex64>, v: &mut Array2<Complex64>, p: usize, q: usize) {
    let apq = m[[p, q]];
    let h = apq.norm();
    let app = m[[p, p]].re;
    let aqq = m[[q, q]].re;
    if h <= f64::EPSILON * 1e-2 * (app.abs() + aqq.abs() + h) {
        return;
    }
    let w = apq / h; // unit phase of the off-diagonal entry
    let theta = (aqq - app) / (2.0 * h);
    let t = if theta.abs() > 1e153 {
        // Avoid overflow in theta² — rotation is essentially infinitesimal.
        1.0 / (2.0 * theta)
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = m.nrows();
    // Columns: A ← A·V with V mixing columns (p,q).
    for r in 0..n {
        let arp = m[[r, p]];
        let arq = m[[r, q]];
        m[[r, p]] = arp * c - arq * (w.conj() * s);
        m[[r, q]] = arp * (w * s) + arq * c;
    }
    // Rows: A ← V†·A.
    for r in 0..n {
        let apr = m[[p, r]];
        let aqr = m[[q, r]];
        m[[p, r]] = apr * c - aqr * (w * s);
        m[[q, r]] = apr * (w.conj() * s) + aqr * c;
    }
    // Pin the rotated 2×2 block to its exact post-rotation values.
    m[[p, p]] = Complex64::new(app - t * h, 0.0);
    m[[q, q]] = Complex64::new(aqq + t * h, 0.0);
    m[[p, q]] = Complex64::new(0.0, 0.0);
    m[[q, p]] = Complex64::new(0.0, 0.0);

    for r in 0..n {
        let vrp = v[[r, p]];
        let vrq = v[[r, q]];
        v[[r, p]] = vrp * c - vrq * (w.conj() * s);
        v[[r, q]] = vrp * (w * s) + vrq * c;
    }
}

fn finish_hermitian(m: Array2<Complex64>, v: Array2<Complex64>) -> HermitianEigen {
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[[i, i]].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));

    let vals: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vecs = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            vecs[[r, dst]] = v[[r, src]];
        }
    }
    HermitianEigen { vals, vecs }
}

/// Eigenvalues of a real symmetric 3×3 matrix, descending, by the
/// trigonometric closed form; falls back to Jacobi if the closed form
/// degenerates numerically.
pub fn sym3_eigenvalues(s: &[[f64; 3]; 3]) -> [f64; 3] {
    let p1 = s[0][1] * s[0][1] + s[0][2] * s[0][2] + s[1][2] * s[1][2];
    if p1 == 0.0 {
        let mut d = [s[0][0], s[1][1], s[2][2]];
        d.sort_by(|a, b| b.total_cmp(a));
        return d;
    }
    let q = (s[0][0] + s[1][1] + s[2][2]) / 3.0;
    let p2 = (s[0][0] - q).powi(2) + (s[1][1] - q).powi(2) + (s[2][2] - q).powi(2) + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    let det_b = {
        let b = |i: usize, j: usize| (s[i][j] - if i == j { q } else { 0.0 }) / p;
        b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1))
            - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0))
            + b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0))
    };
    let r = (det_b / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let e2 = 3.0 * q - e1 - e3;
    let mut out = [e1, e2, e3];
    if out.iter().any(|x| !x.is_finite()) {
        out = sym3_eigenvalues_jacobi(s);
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

fn sym3_eigenvalues_jacobi(s: &[[f64; 3]; 3]) -> [f64; 3] {
    let a = Array2::from_shape_fn((3, 3), |(i, j)| Complex64::new(s[i][j], 0.0));
    let eig = hermitian_eigen(&a).expect("3x3 symmetric Jacobi cannot fail");
    [eig.vals[2], eig.vals[1], eig.vals[0]]
}

/// LU decomposition with partial pivoting; returns (lu, perm, sign-parity).
fn lu_decompose(a: &Array2<Complex64>) -> Option<(Array2<Complex64>, Vec<usize>, f64)> {
    let n = a.nrows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut parity = 1.0;
    for k in 0..n {
        let mut piv = k;
        let mut best = lu[[k, k]].norm();
        for r in (k + 1)..n {
            let v = lu[[r, k]].norm();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best == 0.0 {
            return None;
        }
        if piv != k {
            for c in 0..n {
                let tmp = lu[[k, c]];
                lu[[k, c]] = lu[[piv, c]];
                lu[[piv, c]] = tmp;
            }
            perm.swap(k, piv);
            parity = -parity;
        }
        let pivot = lu[[k, k]];
        for r in (k + 1)..n {
            let f = lu[[r, k]] / pivot;
            lu[[r, k]] = f;
            for c in (k + 1)..n {
                let sub = f * lu[[k, c]];
                lu[[r, c]] -= sub;
            }
        }
    }
    Some((lu, perm, parity))
}

/// Inverse of a small square complex matrix via pivoted LU.
pub fn invert(a: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    let n = a.nrows();
    let (lu, perm, _) = lu_decompose(a)
        .ok_or_else(|| Error::Singular("matrix is singular to working precision".into()))?;
    let mut inv = Array2::zeros((n, n));
    let mut col = vec![Complex64::default(); n];
    for j in 0..n {
        for (i, item) in col.iter_mut().enumerate() {
            *item = if perm[i] == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::default()
            };
        }
        // Forward substitution (unit lower triangle).
        for i in 0..n {
            for k in 0..i {
                let sub = lu[[i, k]] * col[k];
                col[i] -= sub;
            }
        }
        // Back substitution.
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                let sub = lu[[i, k]] * col[k];
                col[i] -= sub;
            }
            col[i] /= lu[[i, i]];
        }
        for i in 0..n {
            inv[[i, j]] = col[i];
        }
    }
    Ok(inv)
}

/// Determinant of a small square complex matrix.
pub fn determinant(a: &Array2<Complex64>) -> Complex64 {
    match lu_decompose(a) {
        None => Complex64::default(),
        Some((lu, _, parity)) => {
            let mut det = Complex64::new(parity, 0.0);
            for i in 0..a.nrows() {
                det *= lu[[i, i]];
            }
            det
        }
    }
}

/// Unit-norm null vector of a (numerically) singular matrix, by Gaussian
/// elimination with complete pivoting. The free variable of the most
/// rank-deficient column is set to one and the rest back-substituted.
pub fn null_vector(a: &Array2<Complex64>) -> Vec<Complex64> {
    let n = a.nrows();
    let mut m = a.clone();
    let mut col_perm: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    for k in 0..n {
        // Complete pivot over the trailing submatrix.
        let (mut bi, mut bj, mut bv) = (k, k, 0.0);
        for i in k..n {
            for j in k..n {
                let v = m[[i, j]].norm();
                if v > bv {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        // Relative rank cutoff.
        if bv <= 1e-12 * fro_norm(a).max(f64::MIN_POSITIVE) {
            break;
        }
        if bi != k {
            for c in 0..n {
                let t = m[[k, c]];
                m[[k, c]] = m[[bi, c]];
                m[[bi, c]] = t;
            }
        }
        if bj != k {
            for r in 0..n {
                let t = m[[r, k]];
                m[[r, k]] = m[[r, bj]];
                m[[r, bj]] = t;
            }
            col_perm.swap(k, bj);
        }
        let pivot = m[[k, k]];
        for i in (k + 1)..n {
            let f = m[[i, k]] / pivot;
            for j in k..n {
                let sub = f * m[[k, j]];
                m[[i, j]] -= sub;
            }
        }
        rank += 1;
    }

    // Solve U x = 0 with x[rank..] = (1, 0, ..) in permuted coordinates.
    let mut x = vec![Complex64::default(); n];
    if rank == n {
        // No numerical null space; return the last unit vector as a fallback.
        x[n - 1] = Complex64::new(1.0, 0.0);
    } else {
        x[rank] = Complex64::new(1.0, 0.0);
        for i in (0..rank).rev() {
            let mut acc = Complex64::default();
            for j in (i + 1)..=rank {
                acc += m[[i, j]] * x[j];
            }
            x[i] = -acc / m[[i, i]];
        }
    }
    let mut out = vec![Complex64::default(); n];
    for (permuted, &original) in col_perm.iter().enumerate() {
        out[original] = x[permuted];
    }
    let norm = out.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut out {
        *z /= norm;
    }
    out
}

/// Both roots of a·z² + b·z + c = 0, cancellation-stable.
pub fn quadratic_roots(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let mut sq = (b * b - 4.0 * a * c).sqrt();
    // Pick the sqrt branch aligned with b so b + sq never cancels.
    if (b.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let q = -(b + sq) / 2.0;
    (q / a, c / q)
}

/// The three roots of z³ + c2·z² + c1·z + c0 = 0 (Cardano + Newton polish).
pub fn cubic_roots(c2: Complex64, c1: Complex64, c0: Complex64) -> [Complex64; 3] {
    let shift = c2 / 3.0;
    // Depressed cubic y³ + p·y + q with z = y − c2/3.
    let p = c1 - c2 * c2 / 3.0;
    let q = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;

    let mut roots = if p.norm() == 0.0 && q.norm() == 0.0 {
        [-shift; 3]
    } else {
        let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
        let sq = disc.sqrt();
        // Choose the branch that maximises |−q/2 ± √Δ| (avoids cancellation).
        let cand1 = -q / 2.0 + sq;
        let cand2 = -q / 2.0 - sq;
        let u3 = if cand1.norm() >= cand2.norm() { cand1 } else { cand2 };
        let u = u3.powf(1.0 / 3.0);
        let v = if u.norm() > 0.0 { -p / (3.0 * u) } else { Complex64::default() };
        let omega = Complex64::new(-0.5, 0.75f64.sqrt());
        [
            u + v - shift,
            u * omega + v * omega.conj() - shift,
            u * omega.conj() + v * omega - shift,
        ]
    };

    // Newton polish on the original cubic.
    for z in &mut roots {
        for _ in 0..8 {
            let f = ((*z + c2) * *z + c1) * *z + c0;
            let df = (3.0 * *z + 2.0 * c2) * *z + c1;
            if df.norm() == 0.0 {
                break;
            }
            let step = f / df;
            *z -= step;
            if step.norm() <= 1e-15 * z.norm().max(1.0) {
                break;
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut impl Rng) -> Array2<Complex64> {
        let g: Array2<Complex64> = Array2::from_shape_fn((n, n), |_| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let mut h = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                h[[i, j]] = (g[[i, j]] + g[[j, i]].conj()) / 2.0;
            }
        }
        h
    }

    #[test]
    fn jacobi_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &n in &[1usize, 2, 3, 8, 25] {
            let h = random_hermitian(n, &mut rng);
            let eig = hermitian_eigen(&h).unwrap();
            let lam = Array2::from_shape_fn((n, n), |(i, j)| {
                if i == j {
                    Complex64::new(eig.vals[i], 0.0)
                } else {
                    Complex64::default()
                }
            });
            let rebuilt = eig.vecs.dot(&lam).dot(&dagger(&eig.vecs));
            let err = fro_norm(&(&rebuilt - &h)) / fro_norm(&h).max(1.0);
            assert!(err < 1e-13, "n={n}: residual {err:.2e}");
            // Orthonormality of the eigenbasis.
            let gram = dagger(&eig.vecs).dot(&eig.vecs);
            let eye: Array2<Complex64> = Array2::eye(n);
            assert!(fro_norm(&(&gram - &eye)) < 1e-13);
            // Sorted ascending.
            for w in eig.vals.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn sym3_closed_form_matches_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let mut s = [[0.0; 3]; 3];
            for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)] {
                let v: f64 = rng.gen_range(-2.0..2.0);
                s[i][j] = v;
                s[j][i] = v;
            }
            let closed = sym3_eigenvalues(&s);
            let jac = sym3_eigenvalues_jacobi(&s);
            for k in 0..3 {
                assert_relative_eq!(closed[k], jac[k], max_relative = 1e-10, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn invert_and_determinant_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = Array2::from_shape_fn((4, 4), |_| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let inv = invert(&a).unwrap();
            let eye: Array2<Complex64> = Array2::eye(4);
            assert!(fro_norm(&(&a.dot(&inv) - &eye)) < 1e-12);
            // det(A)·det(A⁻¹) = 1
            let d = determinant(&a) * determinant(&inv);
            assert_relative_eq!(d.re, 1.0, max_relative = 1e-10);
            assert!(d.im.abs() < 1e-10);
        }
    }

    #[test]
    fn null_vector_of_rank_deficient_matrix() {
        // Rows 0 and 1 proportional: null space is spanned by a known vector.
        let mut a = Array2::zeros((3, 3));
        a[[0, 0]] = Complex64::new(1.0, 0.0);
        a[[0, 1]] = Complex64::new(2.0, 1.0);
        a[[1, 0]] = Complex64::new(2.0, 0.0);
        a[[1, 1]] = Complex64::new(4.0, 2.0);
        a[[2, 2]] = Complex64::new(1.0, 0.0);
        let x = null_vector(&a);
        let mut resid = 0.0f64;
        for i in 0..3 {
            let mut acc = Complex64::default();
            for j in 0..3 {
                acc += a[[i, j]] * x[j];
            }
            resid = resid.max(acc.norm());
        }
        assert!(resid < 1e-12, "residual {resid:.2e}");
    }

    #[test]
    fn cubic_and_quadratic_roots_reproduce_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let r: Vec<Complex64> = (0..3)
                .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                .collect();
            let c2 = -(r[0] + r[1] + r[2]);
            let c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
            let c0 = -r[0] * r[1] * r[2];
            let got = cubic_roots(c2, c1, c0);
            for w in &r {
                let best = got.iter().map(|g| (g - w).norm()).fold(f64::MAX, f64::min);
                assert!(best < 1e-8, "no computed root near {w}: {got:?}");
            }

            let (q1, q2) = quadratic_roots(Complex64::new(1.0, 0.0), -(r[0] + r[1]), r[0] * r[1]);
            let err = ((q1 - r[0]).norm() + (q2 - r[1]).norm())
                .min((q1 - r[1]).norm() + (q2 - r[0]).norm());
            assert!(err < 1e-10);
        }
    }
}
