// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! The four run pipelines behind the CLI subcommands. Each consumes a
//! resolved configuration and produces a [`Table`] of plain numbers plus the
//! footer entries; CSV formatting lives in [`crate::csvout`].
//!
//! Sweeps fan out over rayon with one immutable task per grid point and
//! collect in index order, so the output bytes do not depend on the degree
//! of parallelism.

use rayon::prelude::*;

use bellwave_core::backflow::{self, TimeSeries};
use bellwave_core::bath::{self, DiscreteBathSpec, SingleExcitationState};
use bellwave_core::observables;
use bellwave_core::params::{to_collective, PhysicalParams};
use bellwave_core::pseudomode::{self, DarkLifetime, FourModeState};
use bellwave_core::sensing::{self, SensingProtocol};
use bellwave_core::Complex64;

use crate::config::{Quantity, Resolved, TimeContext};
use crate::{CliError, Result};

/// A finished run: column names, data rows and `key = value` footer entries.
#[derive(Debug, Clone)]
pub struct Table {
    pub pipeline: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub footer: Vec<(String, String)>,
}

/// Non-fatal observations surfaced to stderr by the binary.
pub type Warnings = Vec<String>;

const TWO_PI: f64 = std::f64::consts::TAU;

/// Discrete-bath reproduction run: time-resolved populations, collective
/// amplitudes and the three correlation witnesses from the initial |eg⟩
/// state, with the integrated backflow measures in the footer.
pub fn run_revival(cfg: &Resolved) -> Result<(Table, Warnings)> {
    let bath_cfg = cfg
        .bath
        .ok_or_else(|| CliError::Config("revival needs a [bath] section".into()))?;
    let mut warnings = Vec::new();

    let edge_ratio = 1.0 / (1.0 + (bath_cfg.span / cfg.params.lambda).powi(2));
    if edge_ratio > 0.02 {
        warnings.push(format!(
            "bath.span: spectral density at the window edge is {:.3} of the peak \
             (recommended ≤ 0.02); widen the span to suppress truncation",
            edge_ratio
        ));
    }

    let spec = DiscreteBathSpec {
        n_modes: bath_cfg.n_modes,
        span: bath_cfg.span,
        use_k0_phase: bath_cfg.use_k0_phase,
        single_mode_coupling: None,
    };
    let modes = bath::build_modes(&cfg.params, &spec)?;
    let hamiltonian = bath::assemble_hamiltonian(&cfg.params, &modes);
    let t_p = bath::poincare_time(&spec)?;

    let horizon_q = cfg
        .time_horizon
        .clone()
        .unwrap_or(Quantity::Text("3.5 T_P".into()));
    let ctx = TimeContext {
        t_p: Some(t_p),
        lambda: Some(cfg.params.lambda),
    };
    let horizon = crate::config::resolve_time(&horizon_q, "sweep.time_horizon", ctx)?;
    if horizon <= 0.0 || !horizon.is_finite() {
        return Err(CliError::Config("sweep.time_horizon: must be > 0".into()));
    }

    let n_samples = ((cfg.samples_per_period as f64) * horizon / t_p).round() as usize + 1;
    let times = bath::time_grid(horizon, n_samples.max(cfg.samples_per_period + 1));
    let psi0 = SingleExcitationState::excited_qubit1(modes.len());
    let states = bath::evolve(&hamiltonian, &psi0, &times)?;

    let tscale = if cfg.normalize { cfg.params.omega0 } else { 1.0 };
    let mut rows = Vec::with_capacity(states.len());
    let mut d_series = Vec::with_capacity(states.len());
    let mut b_series = Vec::with_capacity(states.len());
    for (t, s) in times.iter().zip(&states) {
        let c = to_collective(s.alpha1, s.alpha2);
        let (p1, p2) = (s.alpha1.norm_sqr(), s.alpha2.norm_sqr());
        let d_val = observables::trace_distance_closed(c.s, c.a);
        let i_ab = observables::qmi(p1.min(1.0), p2.min(1.0 - p1.min(1.0)))?;
        let b_val = observables::chsh_closed(p1.min(1.0), p2.min(1.0 - p1.min(1.0)))?;
        d_series.push(d_val);
        b_series.push(b_val);
        rows.push(vec![
            t * tscale,
            p1,
            p2,
            s.bath_population(),
            c.s.norm_sqr(),
            c.a.norm_sqr(),
            d_val,
            i_ab,
            b_val,
        ]);
    }

    let ds = TimeSeries::new(times.clone(), d_series).map_err(CliError::from)?;
    let bs = TimeSeries::new(times.clone(), b_series).map_err(CliError::from)?;
    let report = backflow::report(&ds, &bs);

    let footer = vec![
        ("N_blp".to_string(), format!("{}", report.blp)),
        ("N_bell".to_string(), format!("{}", report.bell)),
        ("T_P".to_string(), format!("{}", t_p * tscale)),
        (
            "peak_times".to_string(),
            report
                .peak_times
                .iter()
                .map(|t| format!("{}", t * tscale))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ];

    Ok((
        Table {
            pipeline: "revival",
            columns: vec![
                "t", "p1", "p2", "p_bath", "s_sq", "a_sq", "trace_distance", "qmi", "chsh",
            ],
            rows,
            footer,
        },
        warnings,
    ))
}

/// One cell of the geometry-bandwidth map: both backflow measures from the
/// four-mode dynamics started in |S⟩.
fn map_cell(
    params: &PhysicalParams,
    d: crate::config::Length,
    horizon_q: &Quantity,
    samples_per_period: usize,
) -> Result<(f64, f64)> {
    let ev = match d.lambda0_frac {
        // λ₀ fractions reduce modulo the exact period so the map is strictly
        // periodic in d.
        Some(frac) => pseudomode::build_m_from_phase(params, TWO_PI * frac.rem_euclid(1.0))?,
        None => pseudomode::build_m(params, d.meters)?,
    };
    let decomp = pseudomode::spectral_decompose(&ev).map_err(|e| {
        CliError::Numerical(format!(
            "map cell d = {} m, lambda = {} rad/s: {e}",
            d.meters, params.lambda
        ))
    })?;
    let ctx = TimeContext {
        t_p: None,
        lambda: Some(params.lambda),
    };
    let horizon = crate::config::resolve_time(horizon_q, "sweep.time_horizon", ctx)?;
    let n = ((samples_per_period as f64) * horizon * params.lambda).round() as usize;
    let times = bath::time_grid(horizon, n.max(samples_per_period) + 1);

    let x0 = FourModeState::from_collective(Complex64::new(1.0, 0.0), Complex64::default());
    let states = pseudomode::propagate(&decomp, &x0, &times)?;
    let mut d_series = Vec::with_capacity(states.len());
    let mut b_series = Vec::with_capacity(states.len());
    for x in &states {
        let (a1, a2) = x.qubit_amplitudes();
        let (p1, p2) = (a1.norm_sqr(), a2.norm_sqr());
        d_series.push(observables::trace_distance_closed(x.s, x.a));
        b_series.push(observables::chsh_closed(p1.min(1.0), p2.min(1.0 - p1.min(1.0)))?);
    }
    let ds = TimeSeries::new(times.clone(), d_series).map_err(CliError::from)?;
    let bs = TimeSeries::new(times, b_series).map_err(CliError::from)?;
    Ok((backflow::blp_measure(&ds), backflow::bell_backflow(&bs)))
}

/// Geometry-bandwidth map: 𝒩 and 𝒩_B over the (d, λ) grid, rows ordered
/// d-major then λ.
pub fn run_map(cfg: &Resolved) -> Result<(Table, Warnings)> {
    let d_axis = cfg
        .d_axis
        .clone()
        .ok_or_else(|| CliError::Config("map needs sweep.d_values".into()))?;
    let lambda_axis = cfg
        .lambda_axis
        .clone()
        .ok_or_else(|| CliError::Config("map needs sweep.lambda_values".into()))?;
    let horizon_q = cfg
        .time_horizon
        .clone()
        .unwrap_or(Quantity::Text("25 /lambda".into()));

    let n_l = lambda_axis.len();
    let cells: Vec<Result<(f64, f64)>> = (0..d_axis.len() * n_l)
        .into_par_iter()
        .map(|idx| {
            let d = d_axis[idx / n_l];
            let lambda = lambda_axis[idx % n_l];
            let gamma = match cfg.g_fixed {
                Some(g) => 2.0 * g * g / lambda,
                None => cfg.params.gamma,
            };
            let params = PhysicalParams {
                lambda,
                gamma,
                d: d.meters,
                ..cfg.params
            };
            map_cell(&params, d, &horizon_q, cfg.samples_per_period)
        })
        .collect();

    let (dscale, lscale) = if cfg.normalize {
        (1.0 / cfg.params.lambda0(), 1.0 / cfg.params.omega0)
    } else {
        (1.0, 1.0)
    };
    let mut rows = Vec::with_capacity(cells.len());
    for (idx, cell) in cells.into_iter().enumerate() {
        let (n_blp, n_bell) = cell?;
        let d = d_axis[idx / n_l];
        let lambda = lambda_axis[idx % n_l];
        let d_out = if cfg.normalize {
            d.lambda0_frac.unwrap_or(d.meters * dscale)
        } else {
            d.meters
        };
        rows.push(vec![d_out, lambda * lscale, n_blp, n_bell]);
    }

    Ok((
        Table {
            pipeline: "map",
            columns: vec!["d", "lambda", "n_blp", "n_bell"],
            rows,
            footer: vec![],
        },
        Vec::new(),
    ))
}

/// Near-node lifetime scan: exact four-mode decay rate of the dark branch
/// versus the analytic quadratic law, on a log-spaced offset grid.
pub fn run_lifetime_scan(cfg: &Resolved) -> Result<(Table, Warnings)> {
    let fracs = cfg
        .delta_d_fracs
        .clone()
        .ok_or_else(|| CliError::Config("lifetime needs sweep.delta_d_fracs".into()))?;
    if fracs.iter().any(|&f| f <= 0.0) {
        return Err(CliError::Config(
            "sweep.delta_d_fracs: offsets must be > 0 (the node itself is protected)".into(),
        ));
    }

    let params = cfg.params;
    let lam0_prefactor = pseudomode::lambda0_prefactor(&params).map_err(CliError::from)?;
    let results: Vec<Result<(f64, f64)>> = fracs
        .par_iter()
        .map(|&frac| {
            let eps = std::f64::consts::PI * frac;
            let ev = pseudomode::build_m_from_phase(&params, std::f64::consts::PI + eps)
                .map_err(CliError::from)?;
            let decomp = pseudomode::spectral_decompose(&ev).map_err(|e| {
                CliError::Numerical(format!("lifetime scan at δd/d_node = {frac}: {e}"))
            })?;
            let gamma_exact = match pseudomode::dark_lifetime(&decomp, 0.0) {
                DarkLifetime::Finite { gamma_df, .. } => gamma_df,
                DarkLifetime::Protected => 0.0,
            };
            let gamma_analytic =
                pseudomode::gamma_df_analytic(eps, &params).map_err(CliError::from)?;
            Ok((gamma_exact, gamma_analytic))
        })
        .collect();

    let rate_scale = if cfg.normalize { 1.0 / params.omega0 } else { 1.0 };
    let mut rows = Vec::with_capacity(fracs.len());
    for (frac, res) in fracs.iter().zip(results) {
        let (g_ex, g_an) = res?;
        rows.push(vec![
            *frac,
            g_ex * rate_scale,
            g_an * rate_scale,
            params.lambda / g_ex, // T_df·λ, dimensionless
            params.lambda / g_an,
        ]);
    }

    Ok((
        Table {
            pipeline: "lifetime",
            columns: vec![
                "delta_d_frac",
                "gamma_exact",
                "gamma_analytic",
                "tdf_exact_lambda",
                "tdf_analytic_lambda",
            ],
            rows,
            footer: vec![(
                "lambda0_prefactor".to_string(),
                format!("{}", lam0_prefactor * rate_scale),
            )],
        },
        Vec::new(),
    ))
}

/// Cramér-Rao resolution table over (T_int, N) protocols, with Λ₀ wired from
/// the four-mode prefactor of the same physical parameters.
pub fn run_crb(cfg: &Resolved) -> Result<(Table, Warnings)> {
    if cfg.protocols.is_empty() {
        return Err(CliError::Config("crb needs sensing.protocols".into()));
    }
    let lam0 = pseudomode::lambda0_prefactor(&cfg.params).map_err(CliError::from)?;
    let mut rows = Vec::with_capacity(cfg.protocols.len());
    for &(t_int, n_rep) in &cfg.protocols {
        let proto = SensingProtocol {
            t_int,
            n_rep,
            lambda0_prefactor: lam0,
            k0: cfg.params.k0(),
        };
        let fisher = sensing::fisher_weak_decay(&proto).map_err(CliError::from)?;
        let dd_min = sensing::crb_min_displacement(&proto).map_err(CliError::from)?;
        rows.push(vec![t_int, n_rep as f64, fisher, dd_min]);
    }
    Ok((
        Table {
            pipeline: "crb",
            columns: vec!["t_int", "n_rep", "fisher", "delta_d_min"],
            rows,
            footer: vec![("lambda0_prefactor".to_string(), format!("{lam0}"))],
        },
        Vec::new(),
    ))
}
