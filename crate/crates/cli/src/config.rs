//! Config-file support and flag/file/default merging.
//!
//! The config file is JSON with the same vocabulary as the flags. Float
//! axes (`nbar`, `eta_d`, `eta_l`) accept a scalar, a list, or a range
//! object `{"min": .., "max": .., "steps": .., "scale": "linear"|"log"}`;
//! integer axes (`depth`, `n_max`) accept a scalar or a list.

use crate::args::{Cli, CommandKind, OutputFormat};
use crate::error::{CliError, CliResult};
use serde::Deserialize;
use std::path::{Path, PathBuf};

pub const DEFAULT_ETA_D: f64 = 0.7;
pub const DEFAULT_ETA_L: f64 = 0.8;
pub const DEFAULT_N_MAX: usize = 5;
pub const DEFAULT_SNR_TARGET: f64 = 100.0;
pub const DEFAULT_REP_RATE_HZ: f64 = 80e6;
pub const DEFAULT_TRIALS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<String>,
    panel: Option<String>,
    nbar: Option<Axis>,
    eta_d: Option<Axis>,
    eta_l: Option<Axis>,
    depth: Option<IntAxis>,
    n_max: Option<IntAxis>,
    snr_target: Option<f64>,
    rep_rate_hz: Option<f64>,
    trials: Option<u64>,
    seed: Option<u64>,
    output: Option<PathBuf>,
    format: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Axis {
    Scalar(f64),
    List(Vec<f64>),
    Range {
        min: f64,
        max: f64,
        steps: usize,
        #[serde(default)]
        scale: Scale,
    },
}

#[derive(Debug, Default, Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum IntAxis {
    Scalar(u64),
    List(Vec<u64>),
}

impl Axis {
    fn expand(&self, name: &str) -> CliResult<Vec<f64>> {
        match self {
            Axis::Scalar(x) => Ok(vec![*x]),
            Axis::List(xs) => {
                if xs.is_empty() {
                    return Err(CliError::usage(format!("config: {name} list is empty")));
                }
                Ok(xs.clone())
            }
            Axis::Range {
                min,
                max,
                steps,
                scale,
            } => {
                if *steps < 2 {
                    return Err(CliError::usage(format!(
                        "config: {name} range needs steps >= 2, got {steps}"
                    )));
                }
                if !(min.is_finite() && max.is_finite() && min < max) {
                    return Err(CliError::usage(format!(
                        "config: {name} range needs finite min < max"
                    )));
                }
                Ok(match scale {
                    Scale::Linear => linspace(*min, *max, *steps),
                    Scale::Log => {
                        if *min <= 0.0 {
                            return Err(CliError::usage(format!(
                                "config: {name} log range needs min > 0"
                            )));
                        }
                        logspace(*min, *max, *steps)
                    }
                })
            }
        }
    }
}

impl IntAxis {
    fn expand(&self, name: &str) -> CliResult<Vec<u64>> {
        match self {
            IntAxis::Scalar(x) => Ok(vec![*x]),
            IntAxis::List(xs) => {
                if xs.is_empty() {
                    return Err(CliError::usage(format!("config: {name} list is empty")));
                }
                Ok(xs.clone())
            }
        }
    }
}

pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    let h = (max - min) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                max
            } else {
                min + h * i as f64
            }
        })
        .collect()
}

pub fn logspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    let (lo, hi) = (min.log10(), max.log10());
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                max
            } else {
                10f64.powf(lo + h * i as f64)
            }
        })
        .collect()
}

/// Fully merged run configuration. Axis fields keep their "was it set
/// explicitly" provenance (`Option`) because several commands pick
/// different defaults for the same axis.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub command: CommandKind,
    pub panel: Option<String>,
    pub nbar: Option<Vec<f64>>,
    pub eta_d: Option<Vec<f64>>,
    pub eta_l: Option<Vec<f64>>,
    pub depth: Option<Vec<u32>>,
    pub n_max: Option<Vec<usize>>,
    pub snr_target: f64,
    pub rep_rate_hz: f64,
    pub trials: u64,
    pub seed: u64,
    pub output: PathBuf,
    pub format: OutputFormat,
}

impl Resolved {
    /// Default log-spaced pump grid used wherever `nbar` forms an axis and
    /// the user supplied none: 50 points covering [1e-4, 1].
    pub fn nbar_axis(&self) -> Vec<f64> {
        self.nbar.clone().unwrap_or_else(|| logspace(1e-4, 1.0, 50))
    }

    pub fn eta_d_scalar(&self) -> CliResult<f64> {
        scalar("eta-d", self.eta_d.as_deref(), DEFAULT_ETA_D)
    }

    pub fn eta_l_scalar(&self) -> CliResult<f64> {
        scalar("eta-l", self.eta_l.as_deref(), DEFAULT_ETA_L)
    }

    pub fn n_max_scalar(&self) -> CliResult<usize> {
        scalar("n-max", self.n_max.as_deref(), DEFAULT_N_MAX)
    }

    pub fn nbar_scalar(&self, default: f64) -> CliResult<f64> {
        scalar("nbar", self.nbar.as_deref(), default)
    }

    /// For outputs where `nbar` is an axis on some panels but a fixed pump
    /// on another: a single supplied value is used as the pump; a
    /// multi-value grid targets the axis panels, so the pump keeps its
    /// default.
    pub fn nbar_pump_or_default(&self, default: f64) -> f64 {
        match self.nbar.as_deref() {
            Some([x]) => *x,
            _ => default,
        }
    }

    pub fn depth_scalar(&self, default: u32) -> CliResult<u32> {
        scalar("depth", self.depth.as_deref(), default)
    }
}

fn scalar<T: Copy + std::fmt::Display>(
    name: &str,
    values: Option<&[T]>,
    default: T,
) -> CliResult<T> {
    match values {
        None => Ok(default),
        Some([x]) => Ok(*x),
        Some(xs) => Err(CliError::usage(format!(
            "--{name} must be a single value here, got {} values",
            xs.len()
        ))),
    }
}

fn load_file(path: &Path) -> CliResult<FileConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("invalid config {}: {e}", path.display())))
}

fn narrow_u32(name: &str, xs: Vec<u64>) -> CliResult<Vec<u32>> {
    xs.into_iter()
        .map(|x| {
            u32::try_from(x)
                .map_err(|_| CliError::usage(format!("config: {name} value {x} out of range")))
        })
        .collect()
}

fn narrow_usize(name: &str, xs: Vec<u64>) -> CliResult<Vec<usize>> {
    xs.into_iter()
        .map(|x| {
            usize::try_from(x)
                .map_err(|_| CliError::usage(format!("config: {name} value {x} out of range")))
        })
        .collect()
}

/// Merge defaults, config file, and flags (in increasing precedence).
pub fn resolve(cli: Cli) -> CliResult<Resolved> {
    let file = match &cli.config {
        Some(path) => Some(load_file(path)?),
        None => None,
    };

    let file_command = match file.as_ref().and_then(|f| f.command.as_deref()) {
        Some(name) => Some(
            CommandKind::parse_name(name)
                .ok_or_else(|| CliError::usage(format!("config: unknown command {name:?}")))?,
        ),
        None => None,
    };
    let command = cli
        .command
        .or(file_command)
        .ok_or_else(|| CliError::usage("no command given (flag or config file)".to_string()))?;

    let file_format = match file.as_ref().and_then(|f| f.format.as_deref()) {
        Some(name) => Some(
            OutputFormat::parse_name(name)
                .ok_or_else(|| CliError::usage(format!("config: unknown format {name:?}")))?,
        ),
        None => None,
    };

    let mut resolved = Resolved {
        command,
        panel: None,
        nbar: None,
        eta_d: None,
        eta_l: None,
        depth: None,
        n_max: None,
        snr_target: DEFAULT_SNR_TARGET,
        rep_rate_hz: DEFAULT_REP_RATE_HZ,
        trials: DEFAULT_TRIALS,
        seed: DEFAULT_SEED,
        output: PathBuf::from("."),
        format: OutputFormat::Csv,
    };

    if let Some(f) = file {
        resolved.panel = f.panel;
        if let Some(a) = &f.nbar {
            resolved.nbar = Some(a.expand("nbar")?);
        }
        if let Some(a) = &f.eta_d {
            resolved.eta_d = Some(a.expand("eta_d")?);
        }
        if let Some(a) = &f.eta_l {
            resolved.eta_l = Some(a.expand("eta_l")?);
        }
        if let Some(a) = &f.depth {
            resolved.depth = Some(narrow_u32("depth", a.expand("depth")?)?);
        }
        if let Some(a) = &f.n_max {
            resolved.n_max = Some(narrow_usize("n_max", a.expand("n_max")?)?);
        }
        if let Some(x) = f.snr_target {
            resolved.snr_target = x;
        }
        if let Some(x) = f.rep_rate_hz {
            resolved.rep_rate_hz = x;
        }
        if let Some(x) = f.trials {
            resolved.trials = x;
        }
        if let Some(x) = f.seed {
            resolved.seed = x;
        }
        if let Some(x) = f.output {
            resolved.output = x;
        }
        if let Some(x) = file_format {
            resolved.format = x;
        }
    }

    if cli.panel.is_some() {
        resolved.panel = cli.panel;
    }
    if cli.nbar.is_some() {
        resolved.nbar = cli.nbar;
    }
    if cli.eta_d.is_some() {
        resolved.eta_d = cli.eta_d;
    }
    if cli.eta_l.is_some() {
        resolved.eta_l = cli.eta_l;
    }
    if cli.depth.is_some() {
        resolved.depth = cli.depth;
    }
    if cli.n_max.is_some() {
        resolved.n_max = cli.n_max;
    }
    if let Some(x) = cli.snr_target {
        resolved.snr_target = x;
    }
    if let Some(x) = cli.rep_rate_hz {
        resolved.rep_rate_hz = x;
    }
    if let Some(x) = cli.trials {
        resolved.trials = x;
    }
    if let Some(x) = cli.seed {
        resolved.seed = x;
    }
    if let Some(x) = cli.output {
        resolved.output = x;
    }
    if let Some(x) = cli.format {
        resolved.format = x;
    }

    Ok(resolved)
}
