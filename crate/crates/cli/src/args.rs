//! Command-line surface. Every numeric flag is optional; unset values fall
//! back to the config file (`--config`) and then to the built-in defaults,
//! so the precedence is: defaults < config file < flags.

use clap::{Parser, ValueEnum};
use std::path::PathBuf;

const AFTER_HELP: &str = "\
Defaults (overridable per flag or config file):
  eta-d 0.7, eta-l 0.8, n-max 5, snr-target 100, rep-rate-hz 8e7,
  trials 1000000, seed 42, output '.', format csv.
  nbar grids default to 50 log-spaced points in [1e-4, 1].
  figure2 a/b: depths 1,3,5,15     figure2 c: depth 1, n-max 1..5
  figure2 d: temporal depths 1..15, spatial tree depths 0..4, nbar 0.01
  figure3: depth 15, future device eta-d 0.98 / eta-l 0.95, N = 1..10
  figure4: depth 10; eta grid 0.10..0.98 (step 0.02; panel d step 0.04)
  table1: temporal depth 8, spatial tree depth 3, nbar constraint 0.01
  mc-validate: nbar {1e-3,1e-2,1e-1} x depth {1,4,8} x eta-l {0.6,0.8}

Output files (CSV, or JSON with --format json) per command:
  figure2   figure2a..figure2d    figure3   figure3
  figure4   figure4a,b,d          table1    table1
  sweep     sweep                 mc-validate  mc_validate

Environment:
  PHOTON_MUX_THREADS   caps the worker-thread count (default: all cores)

Exit codes: 0 success, 1 invalid arguments, 2 solver/validation failure.";

/// Performance model of a loop-multiplexed heralded single-photon source:
/// regenerates the reference figures and comparison table, runs parameter
/// sweeps, and validates the closed forms against a Monte Carlo simulator.
#[derive(Debug, Parser)]
#[command(name = "photon-mux", version, after_help = AFTER_HELP)]
pub struct Cli {
    /// What to produce (may also come from the config file).
    #[arg(value_enum)]
    pub command: Option<CommandKind>,

    /// Panel selector for figure2 (a|b|c|d) and figure4 (a|b|d); all
    /// panels when omitted.
    #[arg(long)]
    pub panel: Option<String>,

    /// Mean photon pairs per pulse; a comma-separated list forms the grid
    /// axis where one applies.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub nbar: Option<Vec<f64>>,

    /// Heralding detector efficiency in [0, 1]; list forms a grid axis.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub eta_d: Option<Vec<f64>>,

    /// Per-pass switch + loop transmission in [0, 1]; list forms a grid axis.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub eta_l: Option<Vec<f64>>,

    /// Multiplexing depth (pulses per output bin); list forms a grid axis.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub depth: Option<Vec<u32>>,

    /// Photon-number truncation bound; list forms a grid axis.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub n_max: Option<Vec<usize>>,

    /// SNR operating point for fixed-SNR comparisons.
    #[arg(long)]
    pub snr_target: Option<f64>,

    /// Pump repetition rate in Hz.
    #[arg(long)]
    pub rep_rate_hz: Option<f64>,

    /// Monte Carlo trials per grid point.
    #[arg(long)]
    pub trials: Option<u64>,

    /// Monte Carlo base seed.
    #[arg(long)]
    pub seed: Option<u64>,

    /// Directory to write output files into (created if missing).
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Output file format.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// JSON config file supplying any of the above (flags win).
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    Figure2,
    Figure3,
    Figure4,
    Table1,
    Sweep,
    McValidate,
}

impl CommandKind {
    pub fn parse_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }

    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}
