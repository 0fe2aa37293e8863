// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured numbers (run with `--nocapture` to see them).
//!
//! Criterion 6 compares the integrated backflow measures of the reference
//! revival run against their target windows. Under the pinned Hamiltonian
//! and sampling rule, a 3.5·T_P horizon contains three strong revivals whose
//! summed positive increments exceed the window tops at every mode-ladder
//! span; the check is asserted as specified and left red rather than
//! loosened, with the obtained values printed for the log.

use bellwave_core::backflow::{self, TimeSeries};
use bellwave_core::bath::{self, DiscreteBathSpec, SingleExcitationState};
use bellwave_core::linalg;
use bellwave_core::observables::{self, TSIRELSON};
use bellwave_core::params::{to_collective, PhysicalParams};
use bellwave_core::pseudomode::{self, DarkLifetime, FourModeState};
use bellwave_core::sensing::{self, SensingProtocol};
use bellwave_core::Complex64;

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Revival-figure parameters in ω₀ = 1, v = 1 units (quarter-wavelength
/// separation).
fn revival_params() -> PhysicalParams {
    PhysicalParams {
        omega0: 1.0,
        gamma: 0.05,
        lambda: 0.066,
        j_exchange: -1e-3,
        d: PI / 2.0,
        v: 1.0,
    }
}

/// Documented discretization: 100 modes spanning ±1.76 spectral half-widths,
/// chosen so the reabsorption delay of the returning pulse stays within 1%
/// of the round-trip time (the ladder covers the Lorentzian core only; the
/// edge-truncation warning of the run pipeline is acknowledged).
fn revival_bath() -> DiscreteBathSpec {
    DiscreteBathSpec::new(100, 1.76 * 0.066)
}

/// Lifetime/sensing working point: g = 0.05ω₀, λ = 10⁻³ω₀, J = −5·10⁻³ω₀.
fn sensing_params(omega0: f64, v: f64) -> PhysicalParams {
    PhysicalParams {
        omega0,
        gamma: 5.0 * omega0, // γ = 2g²/λ for g = 0.05ω₀
        lambda: 1e-3 * omega0,
        j_exchange: -5e-3 * omega0,
        d: 0.0,
        v,
    }
}

fn random_admissible(rng: &mut impl Rng) -> (f64, f64, f64) {
    let p1: f64 = rng.gen_range(0.0..1.0);
    let p2: f64 = rng.gen_range(0.0..(1.0 - p1));
    let phi: f64 = rng.gen_range(-PI..PI);
    (p1, p2, phi)
}

fn amplitudes(p1: f64, p2: f64, phi: f64) -> (Complex64, Complex64) {
    (
        Complex64::new(p1.sqrt(), 0.0),
        Complex64::from_polar(p2.sqrt(), phi),
    )
}

#[test]
fn criterion_01_tsirelson_bound_and_closed_form_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE11);
    let mut worst_gap = 0.0f64;
    let mut max_s = 0.0f64;
    for _ in 0..100_000 {
        let (p1, p2, phi) = random_admissible(&mut rng);
        let (a1, a2) = amplitudes(p1, p2, phi);
        let rho = observables::reduced_density(a1, a2).unwrap();
        let closed = observables::chsh_closed(p1, p2).unwrap();
        let general = observables::chsh_horodecki(&rho.matrix).unwrap();
        worst_gap = worst_gap.max((closed - general).abs());
        max_s = max_s.max(closed.max(general));
    }
    println!(
        "ACCEPTANCE 01 tsirelson: worst closed-vs-Horodecki gap {worst_gap:.3e}, \
         max S {max_s:.12} (bound {TSIRELSON:.12})"
    );
    assert!(worst_gap < 1e-10, "closed vs Horodecki gap {worst_gap:.3e}");
    assert!(max_s <= TSIRELSON + 1e-9, "Tsirelson bound violated: {max_s}");
}

#[test]
fn criterion_02_chsh_anchors() {
    let s_half = observables::chsh_closed(0.5, 0.5).unwrap();
    let s_quarter = observables::chsh_closed(0.25, 0.25).unwrap();
    let s_classical = observables::chsh_closed(0.0, 1.0).unwrap();
    println!(
        "ACCEPTANCE 02 chsh anchors: (1/2,1/2) -> {s_half:.12}, (1/4,1/4) -> {s_quarter:.12}, \
         (0,1) -> {s_classical:.12}"
    );
    assert!((s_half - TSIRELSON).abs() < 1e-10);
    assert!((s_quarter - 2.0 * 0.5f64.sqrt()).abs() < 1e-10);
    assert!((s_classical - 2.0).abs() < 1e-10);
}

/// Independent entropy route: I = S(ρ_A) + S(ρ_B) − S(ρ_AB) from eigenvalue
/// sums, no closed form involved.
fn qmi_from_entropies(a1: Complex64, a2: Complex64) -> f64 {
    let rho = observables::reduced_density(a1, a2).unwrap().matrix;
    let entropy = |vals: &[f64]| -> f64 {
        vals.iter()
            .filter(|&&v| v > 1e-15)
            .map(|&v| -v * v.log2())
            .sum()
    };
    // Reduced single-qubit states are diagonal in this sector.
    let p1 = a1.norm_sqr();
    let p2 = a2.norm_sqr();
    let s_a = entropy(&[p1, 1.0 - p1]);
    let s_b = entropy(&[p2, 1.0 - p2]);
    let eig = linalg::hermitian_eigen(&rho).unwrap();
    let s_ab = entropy(&eig.vals.iter().map(|v| v.max(0.0)).collect::<Vec<_>>());
    s_a + s_b - s_ab
}

#[test]
fn criterion_03_qmi_anchors_and_phase_independence() {
    let max_i = observables::qmi(0.5, 0.5).unwrap();
    let zero1 = observables::qmi(0.0, 0.8).unwrap();
    let zero2 = observables::qmi(0.37, 0.0).unwrap();
    println!(
        "ACCEPTANCE 03 qmi anchors: (1/2,1/2) -> {max_i:.12} bits, factorised -> {zero1:.2e}/{zero2:.2e}"
    );
    assert!((max_i - 2.0).abs() < 1e-12);
    assert!(zero1.abs() < 1e-12 && zero2.abs() < 1e-12);

    // φ-independence against the eigenvalue-entropy oracle.
    let (p1, p2) = (0.31, 0.44);
    let reference = observables::qmi(p1, p2).unwrap();
    let mut worst = 0.0f64;
    for k in 0..16 {
        let phi = -PI + 2.0 * PI * k as f64 / 16.0;
        let (a1, a2) = amplitudes(p1, p2, phi);
        worst = worst.max((qmi_from_entropies(a1, a2) - reference).abs());
    }
    println!("ACCEPTANCE 03 qmi phase independence: worst deviation {worst:.3e}");
    assert!(worst < 1e-10);
}

struct RevivalRun {
    times: Vec<f64>,
    t_p: f64,
    states: Vec<SingleExcitationState>,
}

fn run_revival_dynamics() -> RevivalRun {
    let params = revival_params();
    let spec = revival_bath();
    let modes = bath::build_modes(&params, &spec).unwrap();
    let hamiltonian = bath::assemble_hamiltonian(&params, &modes);
    let t_p = bath::poincare_time(&spec).unwrap();
    let times = bath::time_grid(3.5 * t_p, 7001);
    let psi0 = SingleExcitationState::excited_qubit1(modes.len());
    let states = bath::evolve(&hamiltonian, &psi0, &times).unwrap();
    RevivalRun { times, t_p, states }
}

#[test]
fn criterion_04_trace_distance_closed_form_on_revival_run() {
    let run = run_revival_dynamics();
    let mut worst = 0.0f64;
    for s in &run.states {
        let c = to_collective(s.alpha1, s.alpha2);
        let closed = observables::trace_distance_closed(c.s, c.a);
        let rho1 = observables::reduced_density(s.alpha1, s.alpha2).unwrap();
        let rho2 = observables::reduced_density(s.alpha2, s.alpha1).unwrap();
        let general = observables::trace_distance(&rho1.matrix, &rho2.matrix).unwrap();
        worst = worst.max((closed - general).abs());
    }
    println!(
        "ACCEPTANCE 04 trace-distance closed form: worst |2|s||a| − ½‖ρ₁−ρ₂‖₁| = {worst:.3e} \
         over {} samples",
        run.states.len()
    );
    assert!(worst < 1e-9);
}

struct WitnessSeries {
    d: TimeSeries,
    i: TimeSeries,
    b: TimeSeries,
}

fn witness_series(run: &RevivalRun) -> WitnessSeries {
    let mut d = Vec::new();
    let mut i = Vec::new();
    let mut b = Vec::new();
    for s in &run.states {
        let c = to_collective(s.alpha1, s.alpha2);
        let p1 = s.alpha1.norm_sqr().min(1.0);
        let p2 = s.alpha2.norm_sqr().min(1.0 - s.alpha1.norm_sqr().min(1.0));
        d.push(observables::trace_distance_closed(c.s, c.a));
        i.push(observables::qmi(p1, p2).unwrap());
        b.push(observables::chsh_closed(p1, p2).unwrap());
    }
    WitnessSeries {
        d: TimeSeries::new(run.times.clone(), d).unwrap(),
        i: TimeSeries::new(run.times.clone(), i).unwrap(),
        b: TimeSeries::new(run.times.clone(), b).unwrap(),
    }
}

/// Dominant revival peak: the highest detected peak within ±T_P/2 of the
/// target multiple.
fn revival_peak(series: &TimeSeries, t_target: f64, half_window: f64) -> (f64, f64) {
    backflow::detect_peaks(series, backflow::default_prominence(series))
        .into_iter()
        .filter(|t| (t - t_target).abs() <= half_window)
        .map(|t| (t, value_at(series, t)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("a revival peak inside the window")
}

/// The detected peak closest to a reference instant (simultaneity pairing).
fn peak_nearest_to(series: &TimeSeries, t_ref: f64) -> f64 {
    backflow::detect_peaks(series, backflow::default_prominence(series))
        .into_iter()
        .min_by(|a, b| (a - t_ref).abs().total_cmp(&(b - t_ref).abs()))
        .expect("series has peaks")
}

fn value_at(series: &TimeSeries, t: f64) -> f64 {
    let idx = series
        .times
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| (*a - t).abs().total_cmp(&(*b - t).abs()))
        .map(|(i, _)| i)
        .unwrap();
    series.values[idx]
}

#[test]
fn criterion_05_revival_structure() {
    let run = run_revival_dynamics();
    let ws = witness_series(&run);

    // (a) the symmetric component stays frozen at 1/2.
    let mut s_drift = 0.0f64;
    for s in &run.states {
        let c = to_collective(s.alpha1, s.alpha2);
        s_drift = s_drift.max((c.s.norm_sqr() - 0.5).abs());
    }
    println!("ACCEPTANCE 05a dark-component drift: max ||s|² − ½| = {s_drift:.3e}");

    // (b) + (c): revival peak timing, mutual simultaneity, Bell violation.
    let dt = run.times[1] - run.times[0];
    let mut timing_ok = true;
    let mut mutual_ok = true;
    let mut bell_ok = true;
    for n in 1..=3 {
        let target = n as f64 * run.t_p;
        let half = 0.5 * run.t_p;
        // The revival instant is the dominant trace-distance peak; the other
        // witnesses must peak alongside it.
        let (t_d, _) = revival_peak(&ws.d, target, half);
        let t_i = peak_nearest_to(&ws.i, t_d);
        let t_b = peak_nearest_to(&ws.b, t_d);
        let b_at_peak = value_at(&ws.b, t_b);
        let offset = (t_d - target) / target;
        println!(
            "ACCEPTANCE 05b/c revival n={n}: D-peak offset {:+.3}% of nT_P, \
             |t_I − t_D| = {:.1} steps, |t_B − t_D| = {:.1} steps, B at peak = {b_at_peak:.4}",
            offset * 100.0,
            ((t_i - t_d) / dt).abs(),
            ((t_b - t_d) / dt).abs(),
        );
        timing_ok &= (t_d - target).abs() <= 0.01 * target
            && (t_i - target).abs() <= 0.01 * target
            && (t_b - target).abs() <= 0.01 * target;
        mutual_ok &= (t_i - t_d).abs() <= dt + 1e-12 && (t_b - t_d).abs() <= dt + 1e-12;
        bell_ok &= b_at_peak > 2.0;
    }

    assert!(s_drift < 1e-6, "dark component drifted by {s_drift:.3e}");
    assert!(
        mutual_ok,
        "witness peaks not mutually simultaneous within one grid step"
    );
    assert!(bell_ok, "CHSH did not exceed 2 at every revival peak");
    assert!(
        timing_ok,
        "revival peaks not within 1% of the Poincaré multiples (see printed offsets)"
    );
}

#[test]
fn criterion_06_backflow_magnitudes() {
    let run = run_revival_dynamics();
    let ws = witness_series(&run);
    let n_blp = backflow::blp_measure(&ws.d);
    let n_bell = backflow::bell_backflow(&ws.b);
    println!(
        "ACCEPTANCE 06 backflow magnitudes over 3.5·T_P: N = {n_blp:.4} (target 2.41 ± 20% → \
         [1.928, 2.892]), N_B = {n_bell:.4} (target 2.55 ± 20% → [2.04, 3.06])"
    );
    // Three strong revivals fit in the 3.5·T_P horizon and each contributes
    // its full peak height to the positive-increment sum, which pushes both
    // measures above the target windows at every mode-ladder span compatible
    // with the pinned sampling rule; asserted as specified.
    assert!(
        (1.928..=2.892).contains(&n_blp),
        "N = {n_blp:.4} outside 2.41 ± 20%"
    );
    assert!(
        (2.04..=3.06).contains(&n_bell),
        "N_B = {n_bell:.4} outside 2.55 ± 20%"
    );
}

#[test]
fn criterion_07_propagator_vs_rk4() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0407);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let params = PhysicalParams {
            omega0: 1.0,
            gamma: rng.gen_range(0.001..0.2),
            lambda: rng.gen_range(0.005..0.1),
            j_exchange: rng.gen_range(-0.02..0.02),
            d: rng.gen_range(0.0..2.0 * PI),
            v: 1.0,
        };
        let ev = pseudomode::build_m(&params, params.d).unwrap();
        let decomp = pseudomode::spectral_decompose(&ev).unwrap();
        let x0 = FourModeState::from_qubit_amplitudes(
            Complex64::new(1.0, 0.0),
            Complex64::default(),
        );
        let horizon = 10.0 / params.lambda;
        let times: Vec<f64> = (0..=100).map(|i| horizon * i as f64 / 100.0).collect();
        let analytic = pseudomode::propagate(&decomp, &x0, &times).unwrap();
        let h = (120.0 * 1e-9 / horizon).powf(0.25);
        let reference = pseudomode::rk4_reference(&ev, &x0, &times, h).unwrap();
        for (x, y) in analytic.iter().zip(&reference) {
            let err = ((x.s - y.s).norm_sqr()
                + (x.a - y.a).norm_sqr()
                + (x.beta - y.beta).norm_sqr()
                + (x.alpha - y.alpha).norm_sqr())
            .sqrt();
            worst = worst.max(err);
        }
    }
    println!("ACCEPTANCE 07 propagator vs RK4: worst deviation {worst:.3e} over 100 parameter sets");
    assert!(worst < 1e-8);
}

#[test]
fn criterion_08_dark_state_prefactor() {
    let params = sensing_params(1.0, 1.0);
    let lam0 = pseudomode::lambda0_prefactor(&params).unwrap();
    let omega0_si = 2.0 * PI * 5e9;
    let params_si = sensing_params(omega0_si, 3e8);
    let lam0_si = pseudomode::lambda0_prefactor(&params_si).unwrap();
    println!(
        "ACCEPTANCE 08 prefactor: Λ₀ = {lam0:.6e} ω₀ (target 2.21e-6 ± 0.5%), \
         = {lam0_si:.4e} s⁻¹ at ω₀/2π = 5 GHz (≈ 6.9e4)"
    );
    assert!((lam0 / 2.21e-6 - 1.0).abs() < 5e-3);
    assert!((lam0_si / 6.9e4 - 1.0).abs() < 0.02);
}

#[test]
fn criterion_09_quadratic_lifetime_law() {
    let params = sensing_params(1.0, 1.0);

    // Log-log slope of the exact rate over δd/d_node ∈ [1e-6, 1e-3].
    let mut pts = Vec::new();
    for k in 0..=24 {
        let frac = 10f64.powf(-6.0 + 3.0 * k as f64 / 24.0);
        let eps = PI * frac;
        let ev = pseudomode::build_m_from_phase(&params, PI + eps).unwrap();
        let decomp = pseudomode::spectral_decompose(&ev).unwrap();
        match pseudomode::dark_lifetime(&decomp, 0.0) {
            DarkLifetime::Finite { gamma_df, .. } => pts.push((frac.ln(), gamma_df.ln())),
            DarkLifetime::Protected => panic!("unexpected protection at frac {frac}"),
        }
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    // Exact/analytic ratio at δd/d_node = 1e-3.
    let eps = PI * 1e-3;
    let ev = pseudomode::build_m_from_phase(&params, PI + eps).unwrap();
    let decomp = pseudomode::spectral_decompose(&ev).unwrap();
    let gamma_exact = match pseudomode::dark_lifetime(&decomp, 0.0) {
        DarkLifetime::Finite { gamma_df, .. } => gamma_df,
        DarkLifetime::Protected => panic!("should decay off-node"),
    };
    let ratio = gamma_exact / pseudomode::gamma_df_analytic(eps, &params).unwrap();

    // Tolerance band in SI units: T_df at δd/d_node = 1e-5 and 1e-4.
    let params_si = sensing_params(2.0 * PI * 5e9, 3e8);
    let lam0_si = pseudomode::lambda0_prefactor(&params_si).unwrap();
    let t_hours = 1.0 / (lam0_si * (PI * 1e-5).powi(2));
    let t_minutes = 1.0 / (lam0_si * (PI * 1e-4).powi(2));
    println!(
        "ACCEPTANCE 09 lifetime law: slope {slope:.4} (2.00 ± 0.02), exact/analytic ratio \
         {ratio:.6} at 1e-3, band T_df = {t_hours:.3e} s ≈ {:.2} h down to {t_minutes:.1} s ≈ \
         {:.2} min",
        t_hours / 3600.0,
        t_minutes / 60.0
    );
    assert!((slope - 2.0).abs() < 0.02, "slope {slope}");
    assert!((ratio - 1.0).abs() < 0.01, "ratio {ratio}");
    // Arithmetic anchors 1.46e4 s (≈ 4 h) and 146 s (≈ 2.4 min), ±5%.
    assert!((t_hours / 1.46e4 - 1.0).abs() < 0.05);
    assert!((t_minutes / 146.0 - 1.0).abs() < 0.05);
}

/// Roots of det(zI − A + Σ(z)) via polynomial interpolation of the rational
/// determinant: F(z) = det2(z)·(z + λ̃) is a monic cubic, fitted from three
/// sample points. Independent of the spectral factorization in the library.
fn feshbach_roots(params: &PhysicalParams, phi: f64) -> Vec<Complex64> {
    let a11 = Complex64::new(0.0, -(params.omega0 + params.j_exchange));
    let a22 = Complex64::new(0.0, -(params.omega0 - params.j_exchange));
    let lt = params.lambda_tilde();
    let f = |z: Complex64| -> Complex64 {
        let sig = pseudomode::feshbach_self_energy(z, phi, params).unwrap();
        let det2 = (z - a11 + sig[[0, 0]]) * (z - a22 + sig[[1, 1]]) - sig[[0, 1]] * sig[[1, 0]];
        det2 * (z + lt)
    };
    // Monic cubic: fit b2, b1, b0 from F(z_j) − z_j³ at three nodes.
    let nodes = [
        Complex64::new(0.4, 0.3),
        Complex64::new(-0.7, -1.1),
        Complex64::new(0.2, -2.3),
    ];
    let mut vand = Array2::zeros((3, 3));
    for (r, &z) in nodes.iter().enumerate() {
        vand[[r, 0]] = z * z;
        vand[[r, 1]] = z;
        vand[[r, 2]] = Complex64::new(1.0, 0.0);
    }
    let inv = linalg::invert(&vand).unwrap();
    let rhs: Vec<Complex64> = nodes.iter().map(|&z| f(z) - z * z * z).collect();
    let coeff: Vec<Complex64> = (0..3)
        .map(|r| (0..3).map(|c| inv[[r, c]] * rhs[c]).sum())
        .collect();
    linalg::cubic_roots(coeff[0], coeff[1], coeff[2]).to_vec()
}

#[test]
fn criterion_10_feshbach_exactness_and_static_schur_failure() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0A10);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let params = PhysicalParams {
            omega0: 1.0,
            gamma: rng.gen_range(0.001..0.2),
            lambda: rng.gen_range(0.005..0.1),
            j_exchange: rng.gen_range(-0.02..0.02),
            d: 0.0,
            v: 1.0,
        };
        let phi: f64 = rng.gen_range(0.0..2.0 * PI);
        let ev = pseudomode::build_m_from_phase(&params, phi).unwrap();
        let decomp = pseudomode::spectral_decompose(&ev).unwrap();
        let mut roots = feshbach_roots(&params, phi);
        roots.push(-params.lambda_tilde()); // the surviving D-block root
        for mu in &decomp.mu {
            let best = roots.iter().map(|r| (r - mu).norm()).fold(f64::MAX, f64::min);
            worst = worst.max(best);
        }
    }
    println!("ACCEPTANCE 10 Feshbach exactness: worst eigenvalue mismatch {worst:.3e}");
    assert!(worst < 1e-8);

    // Static-Schur control at the lifetime working point: on-shell matches
    // the exact dark rate to 1%, the frozen z = 0 variant misses it by a
    // large factor.
    let params = sensing_params(1.0, 1.0);
    let eps = 0.1;
    let ev = pseudomode::build_m_from_phase(&params, PI + eps).unwrap();
    let decomp = pseudomode::spectral_decompose(&ev).unwrap();
    let gamma_exact = match pseudomode::dark_lifetime(&decomp, 0.0) {
        DarkLifetime::Finite { gamma_df, .. } => gamma_df,
        DarkLifetime::Protected => panic!("should decay"),
    };
    let on_shell = -pseudomode::dark_branch_shift(&pseudomode::effective_matrix(eps, &params), &params).re;
    let static_schur =
        -pseudomode::dark_branch_shift(&pseudomode::effective_matrix_static(eps, &params), &params)
            .re;
    println!(
        "ACCEPTANCE 10 static-Schur control: γ_exact = {gamma_exact:.4e}, on-shell = \
         {on_shell:.4e} ({:+.3}%), static = {static_schur:.4e} ({:.2}× off)",
        (on_shell / gamma_exact - 1.0) * 100.0,
        static_schur / gamma_exact
    );
    assert!((on_shell / gamma_exact - 1.0).abs() < 0.01);
    assert!((static_schur / gamma_exact - 1.0).abs() > 0.5);
}

#[test]
fn criterion_11_crb_anchors() {
    let params = sensing_params(2.0 * PI * 5e9, 3e8);
    let lam0 = pseudomode::lambda0_prefactor(&params).unwrap();
    let proto = |t_int: f64, n_rep: u64| SensingProtocol {
        t_int,
        n_rep,
        lambda0_prefactor: lam0,
        k0: params.k0(),
    };
    let dd_slow = sensing::crb_min_displacement(&proto(1.0, 100_000)).unwrap();
    let dd_fast = sensing::crb_min_displacement(&proto(100e-6, 100_000_000)).unwrap();
    println!(
        "ACCEPTANCE 11 CRB anchors: (1 s, 1e5) -> {:.2} nm (57 ± 2%), \
         (100 µs, 1e8) -> {:.2} nm (180 ± 2%)",
        dd_slow * 1e9,
        dd_fast * 1e9
    );
    assert!((dd_slow / 57e-9 - 1.0).abs() < 0.02);
    assert!((dd_fast / 180e-9 - 1.0).abs() < 0.02);
}
