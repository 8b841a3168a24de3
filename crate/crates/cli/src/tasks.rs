//! One function per CLI command. Each writes its output files with a fixed
//! row order and returns; warnings (grid points with no solution) go to
//! stderr in row order, after the parallel phase, so stderr is
//! deterministic too.

use crate::config::{linspace, Resolved};
use crate::error::{CliError, CliResult};
use crate::fmt::{Cell, Table};
use photon_mux::{
    improvement_factor, performance, run_mc, solve_nbar_for_snr, solve_spatial_nbar_for_snr,
    spatial_improvement_factor, spatial_performance, truncation_delta, waiting_time, Error,
    ImprovementMode, McConfig, Semantics, SourceParams, SpatialParams,
};
use rayon::prelude::*;

const FIGURE2_DEPTHS: [u32; 4] = [1, 3, 5, 15];
const FIGURE2D_TEMPORAL_DEPTHS: std::ops::RangeInclusive<u32> = 1..=15;
const FIGURE2D_SPATIAL_DEPTHS: std::ops::RangeInclusive<u32> = 0..=4;
const FIGURE2D_DEFAULT_NBAR: f64 = 0.01;
const FIGURE3_DEPTH: u32 = 15;
const FIGURE3_MAX_N: u32 = 10;
const FUTURE_ETA_D: f64 = 0.98;
const FUTURE_ETA_L: f64 = 0.95;
const FIGURE4_DEPTH: u32 = 10;
const TABLE1_TEMPORAL_DEPTH: u32 = 8;
const TABLE1_SPATIAL_DEPTH: u32 = 3;
const TABLE1_NBAR: f64 = 0.01;
const MC_GRID_NBAR: [f64; 3] = [1e-3, 1e-2, 1e-1];
const MC_GRID_DEPTH: [u32; 3] = [1, 4, 8];
const MC_GRID_ETA_L: [f64; 2] = [0.6, 0.8];
const MC_Z_BOUND: f64 = 3.0;

/// Default efficiency grid for the `figure4` single-axis panels:
/// 0.10 .. 0.98 in steps of 0.02.
fn default_eta_grid() -> Vec<f64> {
    linspace(0.10, 0.98, 45)
}

/// Coarser grid for the two-dimensional panel: steps of 0.04.
fn default_eta_grid_2d() -> Vec<f64> {
    linspace(0.10, 0.98, 23)
}

fn panel_selection<'a>(
    requested: Option<&str>,
    available: &[&'a str],
    command: &str,
) -> CliResult<Vec<&'a str>> {
    match requested {
        None => Ok(available.to_vec()),
        Some(p) => match available.iter().find(|&&a| a == p) {
            Some(&a) => Ok(vec![a]),
            None => Err(CliError::usage(format!(
                "--panel {p:?} is not valid for {command} (expected one of: {})",
                available.join(", ")
            ))),
        },
    }
}

/// Solve for the pump strength hitting `target` SNR, or record why the
/// point stays empty. Parameter errors still abort the run.
fn solve_cell(
    params: &SourceParams,
    target: f64,
    context: String,
) -> CliResult<(Option<f64>, Option<String>)> {
    match solve_nbar_for_snr(params, target) {
        Ok(nbar) => Ok((Some(nbar), None)),
        Err(Error::InvalidParameter(msg)) => Err(CliError::usage(msg)),
        Err(e) => Ok((None, Some(format!("warning: {context}: {e}")))),
    }
}

fn solve_spatial_cell(
    params: &SpatialParams,
    target: f64,
    context: String,
) -> CliResult<(Option<f64>, Option<String>)> {
    match solve_spatial_nbar_for_snr(params, target) {
        Ok(nbar) => Ok((Some(nbar), None)),
        Err(Error::InvalidParameter(msg)) => Err(CliError::usage(msg)),
        Err(e) => Ok((None, Some(format!("warning: {context}: {e}")))),
    }
}

fn emit(table: &Table, cfg: &Resolved, basename: &str) -> CliResult<()> {
    let path = table.write(&cfg.output, basename, cfg.format)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn emit_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("{w}");
    }
}

// ---------------------------------------------------------------------------
// figure2
// ---------------------------------------------------------------------------

pub fn figure2(cfg: &Resolved) -> CliResult<()> {
    for panel in panel_selection(cfg.panel.as_deref(), &["a", "b", "c", "d"], "figure2")? {
        match panel {
            "a" => figure2_curves(cfg, "figure2a")?,
            "b" => figure2_curves(cfg, "figure2b")?,
            "c" => figure2_truncation(cfg)?,
            "d" => figure2_schemes(cfg)?,
            _ => unreachable!(),
        }
    }
    Ok(())
}

/// Panels a and b plot the same sweep (delivery probability and SNR against
/// pump strength, one curve per depth), so both files carry both columns.
fn figure2_curves(cfg: &Resolved, basename: &str) -> CliResult<()> {
    let eta_d = cfg.eta_d_scalar()?;
    let eta_l = cfg.eta_l_scalar()?;
    let n_max = cfg.n_max_scalar()?;
    let depths = cfg.depth.clone().unwrap_or_else(|| FIGURE2_DEPTHS.to_vec());
    let nbars = cfg.nbar_axis();

    let mut table = Table::new(vec!["nbar", "depth", "p_success", "snr"]);
    for &m in &depths {
        for &nbar in &nbars {
            let params = SourceParams::new(nbar, eta_d, eta_l, m)?.with_n_max(n_max)?;
            let perf = performance(&params)?;
            table.push(vec![
                Cell::Num(nbar),
                Cell::Int(i64::from(m)),
                Cell::Num(perf.p_success),
                Cell::Num(perf.snr),
            ]);
        }
    }
    emit(&table, cfg, basename)
}

/// Truncation analysis: gap between the full numerics at each truncation
/// bound and the single-pair closed form, per pump strength.
fn figure2_truncation(cfg: &Resolved) -> CliResult<()> {
    let eta_d = cfg.eta_d_scalar()?;
    let eta_l = cfg.eta_l_scalar()?;
    let m = cfg.depth_scalar(1)?;
    let n_maxes = cfg.n_max.clone().unwrap_or_else(|| vec![1, 2, 3, 4, 5]);
    let nbars = cfg.nbar_axis();

    let mut table = Table::new(vec!["nbar", "n_max", "delta_p"]);
    for &n_max in &n_maxes {
        for &nbar in &nbars {
            let params = SourceParams::new(nbar, eta_d, eta_l, m)?;
            let deltas = truncation_delta(&params, &[n_max])?;
            table.push(vec![
                Cell::Num(nbar),
                Cell::Int(n_max as i64),
                Cell::Num(deltas[0].1),
            ]);
        }
    }
    emit(&table, cfg, "figure2c")
}

/// Scheme comparison: delivery probability against depth for the temporal
/// loop and the spatial tree, at fixed pump and at fixed SNR.
fn figure2_schemes(cfg: &Resolved) -> CliResult<()> {
    let eta_d = cfg.eta_d_scalar()?;
    let eta_l = cfg.eta_l_scalar()?;
    let n_max = cfg.n_max_scalar()?;
    let nbar_fixed = cfg.nbar_pump_or_default(FIGURE2D_DEFAULT_NBAR);
    let temporal_depths: Vec<u32> = cfg
        .depth
        .clone()
        .unwrap_or_else(|| FIGURE2D_TEMPORAL_DEPTHS.collect());
    let spatial_depths: Vec<u32> = FIGURE2D_SPATIAL_DEPTHS.collect();
    let target = cfg.snr_target;

    let mut table = Table::new(vec!["depth", "mode", "scheme", "p_success"]);
    let mut warnings = Vec::new();

    for &m in &temporal_depths {
        let params = SourceParams::new(nbar_fixed, eta_d, eta_l, m)?.with_n_max(n_max)?;
        table.push(vec![
            Cell::Int(i64::from(m)),
            Cell::Str("fixed-nbar".into()),
            Cell::Str("temporal".into()),
            Cell::OptNum(Some(performance(&params)?.p_success)),
        ]);
    }
    for &d in &spatial_depths {
        let params = SpatialParams::new(nbar_fixed, eta_d, eta_l, d)?.with_n_max(n_max)?;
        table.push(vec![
            Cell::Int(i64::from(d)),
            Cell::Str("fixed-nbar".into()),
            Cell::Str("spatial".into()),
            Cell::OptNum(Some(spatial_performance(&params)?.p_success)),
        ]);
    }
    for &m in &temporal_depths {
        let params = SourceParams::new(0.0, eta_d, eta_l, m)?.with_n_max(n_max)?;
        let (nbar, warn) = solve_cell(
            &params,
            target,
            format!("figure2d temporal depth {m}: snr target {target} unreachable"),
        )?;
        if let Some(w) = warn {
            warnings.push(w);
        }
        let p = match nbar {
            Some(nbar) => Some(performance(&params.with_nbar(nbar)?)?.p_success),
            None => None,
        };
        table.push(vec![
            Cell::Int(i64::from(m)),
            Cell::Str("fixed-snr".into()),
            Cell::Str("temporal".into()),
            Cell::OptNum(p),
        ]);
    }
    for &d in &spatial_depths {
        let params = SpatialParams::new(0.0, eta_d, eta_l, d)?.with_n_max(n_max)?;
        let (nbar, warn) = solve_spatial_cell(
            &params,
            target,
            format!("figure2d spatial depth {d}: snr target {target} unreachable"),
        )?;
        if let Some(w) = warn {
            warnings.push(w);
        }
        let p = match nbar {
            Some(nbar) => Some(spatial_performance(&params.with_nbar(nbar)?)?.p_success),
            None => None,
        };
        table.push(vec![
            Cell::Int(i64::from(d)),
            Cell::Str("fixed-snr".into()),
            Cell::Str("spatial".into()),
            Cell::OptNum(p),
        ]);
    }

    emit_warnings(&warnings);
    emit(&table, cfg, "figure2d")
}

// ---------------------------------------------------------------------------
// figure3
// ---------------------------------------------------------------------------

/// Expected waiting time to deliver N consecutive single photons, for the
/// unswitched source, the multiplexed device, and a future-technology
/// device, all operated at the SNR target.
pub fn figure3(cfg: &Resolved) -> CliResult<()> {
    if cfg.panel.is_some() {
        return Err(CliError::usage("--panel is not valid for figure3"));
    }
    let eta_d = cfg.eta_d_scalar()?;
    let eta_l = cfg.eta_l_scalar()?;
    let n_max = cfg.n_max_scalar()?;
    let m = cfg.depth_scalar(FIGURE3_DEPTH)?;
    let target = cfg.snr_target;
    let rep = cfg.rep_rate_hz;

    let device = SourceParams::new(0.0, eta_d, eta_l, m)?.with_n_max(n_max)?;
    let schemes: [(&str, SourceParams); 3] = [
        ("standard", device.unswitched_baseline()),
        ("multiplexed", device),
        (
            "future",
            SourceParams::new(0.0, FUTURE_ETA_D, FUTURE_ETA_L, m)?.with_n_max(n_max)?,
        ),
    ];

    let mut table = Table::new(vec!["N", "scheme", "wait_seconds"]);
    let mut warnings = Vec::new();
    for (name, params) in &schemes {
        let (nbar, warn) = solve_cell(
            params,
            target,
            format!("figure3 scheme {name}: snr target {target} unreachable"),
        )?;
        if let Some(w) = warn {
            warnings.push(w);
        }
        let solved = match nbar {
            Some(nbar) => Some(params.with_nbar(nbar)?),
            None => None,
        };
        for n in 1..=FIGURE3_MAX_N {
            let wait = match &solved {
                Some(p) => Some(waiting_time(p, n, rep)?),
                None => None,
            };
            table.push(vec![
                Cell::Int(i64::from(n)),
                Cell::Str((*name).into()),
                Cell::OptNum(wait),
            ]);
        }
    }

    emit_warnings(&warnings);
    emit(&table, cfg, "figure3")
}

// ---------------------------------------------------------------------------
// figure4
// ---------------------------------------------------------------------------

pub fn figure4(cfg: &Resolved) -> CliResult<()> {
    for panel in panel_selection(cfg.panel.as_deref(), &["a", "b", "d"], "figure4")? {
        match panel {
            "a" => figure4_single_axis(cfg, Axis4::EtaD)?,
            "b" => figure4_single_axis(cfg, Axis4::EtaL)?,
            "d" => figure4_grid(cfg)?,
            _ => unreachable!(),
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Axis4 {
    EtaD,
    EtaL,
}

/// Delivery probability at the SNR operating point, against one efficiency
/// with the other held fixed.
fn figure4_single_axis(cfg: &Resolved, axis: Axis4) -> CliResult<()> {
    let n_max = cfg.n_max_scalar()?;
    let m = cfg.depth_scalar(FIGURE4_DEPTH)?;
    let target = cfg.snr_target;
    let (grid, fixed, basename) = match axis {
        Axis4::EtaD => (
            cfg.eta_d.clone().unwrap_or_else(default_eta_grid),
            cfg.eta_l_scalar()?,
            "figure4a",
        ),
        Axis4::EtaL => (
            cfg.eta_l.clone().unwrap_or_else(default_eta_grid),
            cfg.eta_d_scalar()?,
            "figure4b",
        ),
    };

    let results: Vec<(Option<f64>, Option<String>)> = grid
        .par_iter()
        .map(|&eta| -> CliResult<(Option<f64>, Option<String>)> {
            let (eta_d, eta_l) = match axis {
                Axis4::EtaD => (eta, fixed),
                Axis4::EtaL => (fixed, eta),
            };
            let params = SourceParams::new(0.0, eta_d, eta_l, m)?.with_n_max(n_max)?;
            let (nbar, warn) = solve_cell(
                &params,
                target,
                format!(
                    "{basename} eta_d={} eta_l={}: snr target {target} unreachable",
                    crate::fmt::sci9(eta_d),
                    crate::fmt::sci9(eta_l),
                ),
            )?;
            let p = match nbar {
                Some(nbar) => Some(performance(&params.with_nbar(nbar)?)?.p_success),
                None => None,
            };
            Ok((p, warn))
        })
        .collect::<CliResult<_>>()?;

    let mut table = Table::new(vec!["eta", "p_success"]);
    let mut warnings = Vec::new();
    for (&eta, (p, warn)) in grid.iter().zip(results) {
        table.push(vec![Cell::Num(eta), Cell::OptNum(p)]);
        if let Some(w) = warn {
            warnings.push(w);
        }
    }

    emit_warnings(&warnings);
    emit(&table, cfg, basename)
}

/// The two-dimensional panel: both efficiencies swept jointly.
fn figure4_grid(cfg: &Resolved) -> CliResult<()> {
    let n_max = cfg.n_max_scalar()?;
    let m = cfg.depth_scalar(FIGURE4_DEPTH)?;
    let target = cfg.snr_target;
    let eta_d_grid = cfg.eta_d.clone().unwrap_or_else(default_eta_grid_2d);
    let eta_l_grid = cfg.eta_l.clone().unwrap_or_else(default_eta_grid_2d);

    let points: Vec<(f64, f64)> = eta_d_grid
        .iter()
        .flat_map(|&ed| eta_l_grid.iter().map(move |&el| (ed, el)))
        .collect();

    let results: Vec<(Option<f64>, Option<String>)> = points
        .par_iter()
        .map(
            |&(eta_d, eta_l)| -> CliResult<(Option<f64>, Option<String>)> {
                let params = SourceParams::new(0.0, eta_d, eta_l, m)?.with_n_max(n_max)?;
                let (nbar, warn) = solve_cell(
                    &params,
                    target,
                    format!(
                        "figure4d eta_d={} eta_L={}: snr target {target} unreachable",
                        crate::fmt::sci9(eta_d),
                        crate::fmt::sci9(eta_l),
                    ),
                )?;
                let p = match nbar {
                    Some(nbar) => Some(performance(&params.with_nbar(nbar)?)?.p_success),
                    None => None,
                };
                Ok((p, warn))
            },
        )
        .collect::<CliResult<_>>()?;

    let mut table = Table::new(vec!["eta_d", "eta_L", "p_success"]);
    let mut warnings = Vec::new();
    for (&(eta_d, eta_l), (p, warn)) in points.iter().zip(results) {
        table.push(vec![Cell::Num(eta_d), Cell::Num(eta_l), Cell::OptNum(p)]);
        if let Some(w) = warn {
            warnings.push(w);
        }
    }

    emit_warnings(&warnings);
    emit(&table, cfg, "figure4d")
}

// ---------------------------------------------------------------------------
// table1
// ---------------------------------------------------------------------------

/// Scheme comparison table. Unlike the figures, every cell here is
/// mandatory: an unreachable SNR target is a hard failure (exit 2).
pub fn table1(cfg: &Resolved) -> CliResult<()> {
    if cfg.panel.is_some() {
        return Err(CliError::usage("--panel is not valid for table1"));
    }
    let eta_d = cfg.eta_d_scalar()?;
    let eta_l = cfg.eta_l_scalar()?;
    let n_max = cfg.n_max_scalar()?;
    let m = cfg.depth_scalar(TABLE1_TEMPORAL_DEPTH)?;
    let nbar_fixed = cfg.nbar_scalar(TABLE1_NBAR)?;
    let target = cfg.snr_target;
    let rep = cfg.rep_rate_hz;

    let temporal = SourceParams::new(nbar_fixed, eta_d, eta_l, m)?.with_n_max(n_max)?;
    let spatial =
        SpatialParams::new(nbar_fixed, eta_d, eta_l, TABLE1_SPATIAL_DEPTH)?.with_n_max(n_max)?;
    let snr_constraint = format!("snr={target}");
    let nbar_constraint = format!("nbar={nbar_fixed}");

    let mut table = Table::new(vec![
        "scheme",
        "sources",
        "detectors",
        "switches",
        "rep_rate",
        "constraint",
        "improvement",
    ]);
    table.push(vec![
        Cell::Str("standard".into()),
        Cell::Int(1),
        Cell::Int(1),
        Cell::Int(0),
        Cell::Num(rep),
        Cell::Str("none".into()),
        Cell::Num(1.0),
    ]);
    table.push(vec![
        Cell::Str("temporal".into()),
        Cell::Int(1),
        Cell::Int(1),
        Cell::Int(1),
        Cell::Num(rep / f64::from(m)),
        Cell::Str(snr_constraint.clone()),
        Cell::Num(improvement_factor(
            &temporal,
            ImprovementMode::FixedSnr { target },
        )?),
    ]);
    table.push(vec![
        Cell::Str("temporal".into()),
        Cell::Int(1),
        Cell::Int(1),
        Cell::Int(1),
        Cell::Num(rep / f64::from(m)),
        Cell::Str(nbar_constraint.clone()),
        Cell::Num(improvement_factor(&temporal, ImprovementMode::FixedNbar)?),
    ]);
    table.push(vec![
        Cell::Str("spatial".into()),
        Cell::Int(spatial.sources() as i64),
        Cell::Int(spatial.sources() as i64),
        Cell::Int(spatial.switches() as i64),
        Cell::Num(rep),
        Cell::Str(snr_constraint),
        Cell::Num(spatial_improvement_factor(
            &spatial,
            ImprovementMode::FixedSnr { target },
        )?),
    ]);
    table.push(vec![
        Cell::Str("spatial".into()),
        Cell::Int(spatial.sources() as i64),
        Cell::Int(spatial.sources() as i64),
        Cell::Int(spatial.switches() as i64),
        Cell::Num(rep),
        Cell::Str(nbar_constraint),
        Cell::Num(spatial_improvement_factor(
            &spatial,
            ImprovementMode::FixedNbar,
        )?),
    ]);

    emit(&table, cfg, "table1")
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

/// Cartesian product over every list-valued axis; one row per point.
pub fn sweep(cfg: &Resolved) -> CliResult<()> {
    if cfg.panel.is_some() {
        return Err(CliError::usage("--panel is not valid for sweep"));
    }
    let nbars = cfg.nbar_axis();
    let eta_ds = cfg.eta_d.clone().unwrap_or_else(|| vec![0.7]);
    let eta_ls = cfg.eta_l.clone().unwrap_or_else(|| vec![0.8]);
    let depths = cfg.depth.clone().unwrap_or_else(|| vec![1]);
    let n_maxes = cfg.n_max.clone().unwrap_or_else(|| vec![5]);

    let mut points = Vec::new();
    for &nbar in &nbars {
        for &eta_d in &eta_ds {
            for &eta_l in &eta_ls {
                for &m in &depths {
                    for &n_max in &n_maxes {
                        points.push((nbar, eta_d, eta_l, m, n_max));
                    }
                }
            }
        }
    }

    let rows: Vec<Vec<Cell>> = points
        .par_iter()
        .map(|&(nbar, eta_d, eta_l, m, n_max)| -> CliResult<Vec<Cell>> {
            let params = SourceParams::new(nbar, eta_d, eta_l, m)?.with_n_max(n_max)?;
            let perf = performance(&params)?;
            Ok(vec![
                Cell::Num(nbar),
                Cell::Num(eta_d),
                Cell::Num(eta_l),
                Cell::Int(i64::from(m)),
                Cell::Int(n_max as i64),
                Cell::Num(perf.p_success),
                Cell::Num(perf.p_noise),
                Cell::Num(perf.snr),
            ])
        })
        .collect::<CliResult<_>>()?;

    let mut table = Table::new(vec![
        "nbar",
        "eta_d",
        "eta_l",
        "depth",
        "n_max",
        "p_success",
        "p_noise",
        "snr",
    ]);
    for row in rows {
        table.push(row);
    }
    emit(&table, cfg, "sweep")
}

// ---------------------------------------------------------------------------
// mc-validate
// ---------------------------------------------------------------------------

/// Cross-check the closed forms against the Monte Carlo sampler on the
/// standard validation grid. Any point failing the 3-sigma agreement check
/// fails the whole command (exit 2).
pub fn mc_validate(cfg: &Resolved) -> CliResult<()> {
    if cfg.panel.is_some() {
        return Err(CliError::usage("--panel is not valid for mc-validate"));
    }
    let eta_d = cfg.eta_d_scalar()?;
    let n_max = cfg.n_max_scalar()?;
    let trials = cfg.trials;

    let mut table = Table::new(vec![
        "nbar",
        "depth",
        "eta_l",
        "quantity",
        "engine",
        "estimate",
        "std_error",
        "z",
        "passed",
    ]);
    let mut failures = 0usize;
    let mut point_index = 0u64;

    for &nbar in &MC_GRID_NBAR {
        for &m in &MC_GRID_DEPTH {
            for &eta_l in &MC_GRID_ETA_L {
                let params = SourceParams::new(nbar, eta_d, eta_l, m)?.with_n_max(n_max)?;
                let perf = performance(&params)?;
                let result = run_mc(&McConfig {
                    params,
                    trials,
                    seed: cfg.seed.wrapping_add(point_index),
                    semantics: Semantics::Union,
                })?;
                point_index += 1;

                let quantities = [
                    ("p_success", perf.p_success, result.p_success_hat),
                    ("p_noise", perf.p_noise, result.p_noise_hat),
                ];
                for (name, engine, estimate) in quantities {
                    // Combined standard error: binomial sampling error of the
                    // estimate plus the same-size error a simulation of the
                    // engine value would carry. Keeps near-zero cells (where
                    // the empirical SE collapses to 0) honestly testable.
                    let se = ((estimate * (1.0 - estimate) + engine * (1.0 - engine))
                        / trials as f64)
                        .sqrt();
                    let z = if se > 0.0 {
                        (estimate - engine).abs() / se
                    } else if estimate == engine {
                        0.0
                    } else {
                        f64::INFINITY
                    };
                    let passed = z <= MC_Z_BOUND;
                    if !passed {
                        failures += 1;
                    }
                    println!(
                        "{} nbar={nbar} depth={m} eta_l={eta_l} {name}: engine={} mc={} z={:.2}",
                        if passed { "pass" } else { "FAIL" },
                        crate::fmt::sci9(engine),
                        crate::fmt::sci9(estimate),
                        z,
                    );
                    table.push(vec![
                        Cell::Num(nbar),
                        Cell::Int(i64::from(m)),
                        Cell::Num(eta_l),
                        Cell::Str(name.into()),
                        Cell::Num(engine),
                        Cell::Num(estimate),
                        Cell::Num(se),
                        Cell::Num(z),
                        Cell::Bool(passed),
                    ]);
                }
            }
        }
    }

    emit(&table, cfg, "mc_validate")?;
    let points = MC_GRID_NBAR.len() * MC_GRID_DEPTH.len() * MC_GRID_ETA_L.len();
    if failures > 0 {
        Err(CliError::failure(format!(
            "mc-validate: {failures} of {} checks outside {MC_Z_BOUND} combined standard errors",
            2 * points
        )))
    } else {
        println!(
            "mc-validate: all {} checks within {MC_Z_BOUND} combined standard errors",
            2 * points
        );
        Ok(())
    }
}
