// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Structured run configuration: TOML with `[physical]`, `[bath]`, `[sweep]`,
//! `[sensing]` and `[output]` sections.
//!
//! Scalar quantities accept either a bare number in the base unit (rad/s,
//! metres, seconds) or a `"value unit"` string. Frequencies convert from Hz
//! multiples via ω = 2πν and from `omega0` fractions; distances from λ₀
//! fractions and metric prefixes; times from `T_P` (Poincaré) and `/lambda`
//! (memory-time) multiples. Distances given as λ₀ fractions keep the exact
//! fraction so geometry phases can be reduced modulo a full period without
//! rounding.

use serde::{Deserialize, Serialize};

use bellwave_core::params::PhysicalParams;

use crate::{CliError, Result};

/// A number with an optional unit tag, as written in the config file.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Number(f64),
    Text(String),
}

impl Quantity {
    fn split(&self, field: &str) -> Result<(f64, Option<String>)> {
        match self {
            Quantity::Number(x) => Ok((*x, None)),
            Quantity::Text(s) => {
                let s = s.trim();
                let (num, unit) = match s.find(|c: char| c.is_whitespace()) {
                    Some(pos) => (&s[..pos], Some(s[pos..].trim().to_string())),
                    None => (s, None),
                };
                let value: f64 = num.parse().map_err(|_| {
                    CliError::Config(format!("{field}: cannot parse number in {s:?}"))
                })?;
                Ok((value, unit))
            }
        }
    }
}

const TWO_PI: f64 = std::f64::consts::TAU;
const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Resolve a frequency-like quantity to rad/s. `omega0` is required for
/// `omega0`-fraction units.
pub fn resolve_frequency(q: &Quantity, field: &str, omega0: Option<f64>) -> Result<f64> {
    let (value, unit) = q.split(field)?;
    let out = match unit.as_deref() {
        None | Some("rad/s") => value,
        Some("Hz") => value * TWO_PI,
        Some("kHz") => value * TWO_PI * 1e3,
        Some("MHz") => value * TWO_PI * 1e6,
        Some("GHz") => value * TWO_PI * 1e9,
        Some("omega0") => {
            value
                * omega0.ok_or_else(|| {
                    CliError::Config(format!("{field}: omega0 units not available here"))
                })?
        }
        Some(u) => {
            return Err(CliError::Config(format!(
                "{field}: unknown frequency unit {u:?} (use rad/s, Hz, kHz, MHz, GHz, omega0)"
            )))
        }
    };
    Ok(out)
}

/// A resolved distance: metres, plus the exact λ₀ fraction when the config
/// expressed it that way.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Length {
    pub meters: f64,
    pub lambda0_frac: Option<f64>,
}

pub fn resolve_length(q: &Quantity, field: &str, lambda0: f64) -> Result<Length> {
    let (value, unit) = q.split(field)?;
    let out = match unit.as_deref() {
        None | Some("m") => Length {
            meters: value,
            lambda0_frac: None,
        },
        Some("mm") => Length {
            meters: value * 1e-3,
            lambda0_frac: None,
        },
        Some("um") => Length {
            meters: value * 1e-6,
            lambda0_frac: None,
        },
        Some("nm") => Length {
            meters: value * 1e-9,
            lambda0_frac: None,
        },
        Some("lambda0") => Length {
            meters: value * lambda0,
            lambda0_frac: Some(value),
        },
        Some(u) => {
            return Err(CliError::Config(format!(
                "{field}: unknown length unit {u:?} (use m, mm, um, nm, lambda0)"
            )))
        }
    };
    Ok(out)
}

pub fn resolve_velocity(q: &Quantity, field: &str) -> Result<f64> {
    let (value, unit) = q.split(field)?;
    match unit.as_deref() {
        None | Some("m/s") => Ok(value),
        Some("c") => Ok(value * SPEED_OF_LIGHT),
        Some(u) => Err(CliError::Config(format!(
            "{field}: unknown velocity unit {u:?} (use m/s or c)"
        ))),
    }
}

/// Context for time units that reference derived scales.
#[derive(Debug, Clone, Copy, Default)]
pub struct TimeContext {
    /// Poincaré time, for `T_P` units (discrete-bath runs).
    pub t_p: Option<f64>,
    /// Spectral half-width, for `/lambda` (memory-time) units.
    pub lambda: Option<f64>,
}

pub fn resolve_time(q: &Quantity, field: &str, ctx: TimeContext) -> Result<f64> {
    let (value, unit) = q.split(field)?;
    let out = match unit.as_deref() {
        None | Some("s") => value,
        Some("ms") => value * 1e-3,
        Some("us") => value * 1e-6,
        Some("ns") => value * 1e-9,
        Some("T_P") => {
            value
                * ctx.t_p.ok_or_else(|| {
                    CliError::Config(format!("{field}: T_P units need a [bath] section"))
                })?
        }
        Some("/lambda") => {
            value
                / ctx.lambda.ok_or_else(|| {
                    CliError::Config(format!("{field}: /lambda units need lambda"))
                })?
        }
        Some(u) => {
            return Err(CliError::Config(format!(
                "{field}: unknown time unit {u:?} (use s, ms, us, ns, T_P, /lambda)"
            )))
        }
    };
    Ok(out)
}

/// An axis: an explicit list of quantities, or a generated range.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum AxisSpec {
    List(Vec<Quantity>),
    Range {
        min: Quantity,
        max: Quantity,
        count: usize,
        #[serde(default)]
        log: bool,
    },
}

impl AxisSpec {
    /// Expand to raw (value, unit-preserving Quantity) entries.
    fn expand(&self, field: &str) -> Result<Vec<Quantity>> {
        match self {
            AxisSpec::List(v) => {
                if v.is_empty() {
                    return Err(CliError::Config(format!("{field}: empty axis")));
                }
                Ok(v.clone())
            }
            AxisSpec::Range {
                min,
                max,
                count,
                log,
            } => {
                if *count < 2 {
                    return Err(CliError::Config(format!("{field}: range count must be ≥ 2")));
                }
                let (lo, unit_lo) = min.split(field)?;
                let (hi, unit_hi) = max.split(field)?;
                if unit_lo != unit_hi {
                    return Err(CliError::Config(format!(
                        "{field}: range endpoints must share a unit"
                    )));
                }
                if *log && (lo <= 0.0 || hi <= 0.0) {
                    return Err(CliError::Config(format!(
                        "{field}: log range needs positive endpoints"
                    )));
                }
                if hi <= lo {
                    return Err(CliError::Config(format!("{field}: range needs max > min")));
                }
                let n = *count;
                let vals = (0..n).map(move |i| {
                    let t = i as f64 / (n - 1) as f64;
                    if *log {
                        lo * (hi / lo).powf(t)
                    } else {
                        lo + (hi - lo) * t
                    }
                });
                Ok(vals
                    .map(|v| match &unit_lo {
                        None => Quantity::Number(v),
                        Some(u) => Quantity::Text(format!("{v} {u}")),
                    })
                    .collect())
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalBlock {
    pub omega0: Quantity,
    #[serde(default)]
    pub gamma: Option<Quantity>,
    /// Alternative to `gamma`: fix the continuum coupling g = √(γλ/2); γ is
    /// then derived per λ. Exactly one of `gamma`/`g` must be present.
    #[serde(default)]
    pub g: Option<Quantity>,
    pub lambda: Quantity,
    pub j: Quantity,
    #[serde(default)]
    pub d: Option<Quantity>,
    pub v: Quantity,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathBlock {
    pub n_modes: usize,
    pub span: Quantity,
    #[serde(default = "default_true")]
    pub use_k0_phase: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SweepBlock {
    #[serde(default)]
    pub d_values: Option<AxisSpec>,
    #[serde(default)]
    pub lambda_values: Option<AxisSpec>,
    /// Log-spaced node offsets δd/d_node for the lifetime scan.
    #[serde(default)]
    pub delta_d_fracs: Option<AxisSpec>,
    #[serde(default)]
    pub time_horizon: Option<Quantity>,
    #[serde(default)]
    pub samples_per_period: Option<usize>,
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SensingBlock {
    /// (interrogation time, repetition count) pairs for the resolution table.
    #[serde(default)]
    pub protocols: Vec<(Quantity, u64)>,
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub path: Option<String>,
    /// Emit dimensionless columns (times in 1/ω₀, rates in ω₀, lengths
    /// in λ₀) instead of SI.
    #[serde(default)]
    pub normalize: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub physical: PhysicalBlock,
    #[serde(default)]
    pub bath: Option<BathBlock>,
    #[serde(default)]
    pub sweep: Option<SweepBlock>,
    #[serde(default)]
    pub sensing: Option<SensingBlock>,
    #[serde(default)]
    pub output: Option<OutputBlock>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Resolve every quantity and validate all referenced blocks before any
    /// computation starts.
    pub fn resolve(&self) -> Result<Resolved> {
        let omega0 = resolve_frequency(&self.physical.omega0, "physical.omega0", None)?;
        if omega0 <= 0.0 || !omega0.is_finite() {
            return Err(CliError::Config(format!(
                "physical.omega0: must be > 0, got {omega0}"
            )));
        }
        let v = resolve_velocity(&self.physical.v, "physical.v")?;
        let lambda = resolve_frequency(&self.physical.lambda, "physical.lambda", Some(omega0))?;
        let j = resolve_frequency(&self.physical.j, "physical.j", Some(omega0))?;

        let (gamma, g_fixed) = match (&self.physical.gamma, &self.physical.g) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "physical: give exactly one of gamma / g, not both".into(),
                ))
            }
            (None, None) => {
                return Err(CliError::Config(
                    "physical: one of gamma / g is required".into(),
                ))
            }
            (Some(q), None) => (
                resolve_frequency(q, "physical.gamma", Some(omega0))?,
                None,
            ),
            (None, Some(q)) => {
                let g = resolve_frequency(q, "physical.g", Some(omega0))?;
                if g <= 0.0 || !g.is_finite() {
                    return Err(CliError::Config(format!("physical.g: must be > 0, got {g}")));
                }
                (2.0 * g * g / lambda, Some(g))
            }
        };

        let lambda0 = TWO_PI * v / omega0;
        let d = match &self.physical.d {
            None => Length {
                meters: 0.0,
                lambda0_frac: Some(0.0),
            },
            Some(q) => resolve_length(q, "physical.d", lambda0)?,
        };

        let params = PhysicalParams {
            omega0,
            gamma,
            lambda,
            j_exchange: j,
            d: d.meters,
            v,
        };
        params.validate().map_err(CliError::from)?;

        let bath = match &self.bath {
            None => None,
            Some(b) => {
                if b.n_modes == 0 {
                    return Err(CliError::Config("bath.n_modes: must be ≥ 1".into()));
                }
                let span = resolve_frequency(&b.span, "bath.span", Some(omega0))?;
                if span <= 0.0 || !span.is_finite() {
                    return Err(CliError::Config(format!(
                        "bath.span: must be > 0, got {span}"
                    )));
                }
                Some(ResolvedBath {
                    n_modes: b.n_modes,
                    span,
                    use_k0_phase: b.use_k0_phase,
                })
            }
        };

        let sweep = self.sweep.clone().unwrap_or_default();
        let samples_per_period = sweep.samples_per_period.unwrap_or(2000);
        if samples_per_period < 100 {
            return Err(CliError::Config(format!(
                "sweep.samples_per_period: must be ≥ 100, got {samples_per_period}"
            )));
        }

        let d_axis = match &sweep.d_values {
            None => None,
            Some(spec) => {
                let vals: Vec<Length> = spec
                    .expand("sweep.d_values")?
                    .iter()
                    .map(|q| resolve_length(q, "sweep.d_values", lambda0))
                    .collect::<Result<_>>()?;
                check_increasing("sweep.d_values", vals.iter().map(|l| l.meters))?;
                Some(vals)
            }
        };
        let lambda_axis = match &sweep.lambda_values {
            None => None,
            Some(spec) => {
                let vals: Vec<f64> = spec
                    .expand("sweep.lambda_values")?
                    .iter()
                    .map(|q| resolve_frequency(q, "sweep.lambda_values", Some(omega0)))
                    .collect::<Result<_>>()?;
                check_increasing("sweep.lambda_values", vals.iter().cloned())?;
                if vals.iter().any(|&l| l <= 0.0) {
                    return Err(CliError::Config(
                        "sweep.lambda_values: values must be > 0".into(),
                    ));
                }
                Some(vals)
            }
        };
        let delta_d_fracs = match &sweep.delta_d_fracs {
            None => None,
            Some(spec) => {
                let vals: Vec<f64> = spec
                    .expand("sweep.delta_d_fracs")?
                    .iter()
                    .map(|q| match q {
                        Quantity::Number(x) => Ok(*x),
                        Quantity::Text(t) => t.trim().parse::<f64>().map_err(|_| {
                            CliError::Config(format!(
                                "sweep.delta_d_fracs: dimensionless values only, got {t:?}"
                            ))
                        }),
                    })
                    .collect::<Result<_>>()?;
                check_increasing("sweep.delta_d_fracs", vals.iter().cloned())?;
                Some(vals)
            }
        };

        let sensing = self.sensing.clone().unwrap_or_default();
        let mut protocols = Vec::new();
        for (i, (t_q, n_rep)) in sensing.protocols.iter().enumerate() {
            let t_int = resolve_time(
                t_q,
                &format!("sensing.protocols[{i}]"),
                TimeContext::default(),
            )?;
            if t_int <= 0.0 || !t_int.is_finite() {
                return Err(CliError::Config(format!(
                    "sensing.protocols[{i}]: t_int must be > 0"
                )));
            }
            if *n_rep == 0 {
                return Err(CliError::Config(format!(
                    "sensing.protocols[{i}]: n_rep must be ≥ 1"
                )));
            }
            protocols.push((t_int, *n_rep));
        }

        let output = self.output.clone().unwrap_or_default();

        Ok(Resolved {
            params,
            g_fixed,
            d,
            bath,
            d_axis,
            lambda_axis,
            delta_d_fracs,
            time_horizon: sweep.time_horizon.clone(),
            samples_per_period,
            protocols,
            out_path: output.path,
            normalize: output.normalize,
        })
    }
}

fn check_increasing(field: &str, vals: impl Iterator<Item = f64>) -> Result<()> {
    let v: Vec<f64> = vals.collect();
    if v.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Config(format!(
            "{field}: values must be strictly increasing"
        )));
    }
    Ok(())
}

/// Fully resolved configuration in base units.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub params: PhysicalParams,
    /// Fixed continuum coupling when `[physical].g` was given; λ sweeps then
    /// rescale γ = 2g²/λ cell by cell.
    pub g_fixed: Option<f64>,
    pub d: Length,
    pub bath: Option<ResolvedBath>,
    pub d_axis: Option<Vec<Length>>,
    pub lambda_axis: Option<Vec<f64>>,
    pub delta_d_fracs: Option<Vec<f64>>,
    /// Unresolved horizon (needs T_P or λ context from the pipeline).
    pub time_horizon: Option<Quantity>,
    pub samples_per_period: usize,
    pub protocols: Vec<(f64, u64)>,
    pub out_path: Option<String>,
    pub normalize: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct ResolvedBath {
    pub n_modes: usize,
    pub span: f64,
    pub use_k0_phase: bool,
}

impl Resolved {
    /// Effective configuration echo: defaults filled, every quantity in base
    /// units (rad/s, m, s), λ₀-fractions preserved exactly. The output is a
    /// valid run configuration — parsing it back and re-running reproduces
    /// the run byte for byte.
    pub fn effective_toml(&self) -> String {
        fn length_q(l: &Length) -> Quantity {
            match l.lambda0_frac {
                Some(f) => Quantity::Text(format!("{f} lambda0")),
                None => Quantity::Number(l.meters),
            }
        }
        #[derive(Serialize)]
        struct EffPhysical {
            omega0: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            gamma: Option<f64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            g: Option<f64>,
            lambda: f64,
            j: f64,
            d: Quantity,
            v: f64,
        }
        #[derive(Serialize)]
        struct EffBath {
            n_modes: usize,
            span: f64,
            use_k0_phase: bool,
        }
        #[derive(Serialize)]
        struct EffSweep {
            #[serde(skip_serializing_if = "Option::is_none")]
            d_values: Option<Vec<Quantity>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            lambda_values: Option<Vec<f64>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            delta_d_fracs: Option<Vec<f64>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            time_horizon: Option<Quantity>,
            samples_per_period: usize,
        }
        #[derive(Serialize)]
        struct EffSensing {
            protocols: Vec<(f64, u64)>,
        }
        #[derive(Serialize)]
        struct EffOutput {
            #[serde(skip_serializing_if = "Option::is_none")]
            path: Option<String>,
            normalize: bool,
        }
        #[derive(Serialize)]
        struct Eff {
            physical: EffPhysical,
            #[serde(skip_serializing_if = "Option::is_none")]
            bath: Option<EffBath>,
            sweep: EffSweep,
            #[serde(skip_serializing_if = "Option::is_none")]
            sensing: Option<EffSensing>,
            output: EffOutput,
        }
        let eff = Eff {
            physical: EffPhysical {
                omega0: self.params.omega0,
                gamma: if self.g_fixed.is_none() {
                    Some(self.params.gamma)
                } else {
                    None
                },
                g: self.g_fixed,
                lambda: self.params.lambda,
                j: self.params.j_exchange,
                d: length_q(&self.d),
                v: self.params.v,
            },
            bath: self.bath.map(|b| EffBath {
                n_modes: b.n_modes,
                span: b.span,
                use_k0_phase: b.use_k0_phase,
            }),
            sweep: EffSweep {
                d_values: self
                    .d_axis
                    .as_ref()
                    .map(|axis| axis.iter().map(length_q).collect()),
                lambda_values: self.lambda_axis.clone(),
                delta_d_fracs: self.delta_d_fracs.clone(),
                time_horizon: self.time_horizon.clone(),
                samples_per_period: self.samples_per_period,
            },
            sensing: if self.protocols.is_empty() {
                None
            } else {
                Some(EffSensing {
                    protocols: self.protocols.clone(),
                })
            },
            output: EffOutput {
                path: self.out_path.clone(),
                normalize: self.normalize,
            },
        };
        toml::to_string(&eff).expect("effective config serializes")
    }
}
