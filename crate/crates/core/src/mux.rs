//! The temporal-multiplexing performance model.
//!
//! A pulsed pair source drives one output time bin per `m` pump pulses. A
//! herald on pulse `t` stores the idler photon in a switched fibre loop
//! until the bin closes after pulse `m`, so the photon transits the lumped
//! switch + loop element `m − t + 1` times, each with transmission `η_L`.
//! This module turns the single-pulse statistics from [`crate::fock`] into
//! per-bin success/noise probabilities, SNR-constrained operating points,
//! improvement factors over an unswitched source, a spatial-multiplexing
//! comparison model, and delivery waiting times.

use crate::error::{Error, Result};
use crate::fock::{
    binomial_loss, pnr_herald, thermal_pmf, DetectorModel, JointPairState, PhotonNumberDist,
    DEFAULT_N_MAX, MAX_N_MAX,
};

/// Parameters of one temporally multiplexed source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceParams {
    /// Mean photon pairs per pump pulse.
    pub nbar: f64,
    /// Heralding detector efficiency.
    pub eta_d: f64,
    /// Lumped transmission of one switch + storage-loop transit.
    pub eta_l: f64,
    /// Multiplexing depth: pump pulses combined per output bin.
    pub m: u32,
    /// Photon-number truncation bound.
    pub n_max: usize,
}

impl SourceParams {
    /// Builds params with the default truncation (`n_max = 5`).
    pub fn new(nbar: f64, eta_d: f64, eta_l: f64, m: u32) -> Result<Self> {
        Self {
            nbar,
            eta_d,
            eta_l,
            m,
            n_max: DEFAULT_N_MAX,
        }
        .validated()
    }

    /// Same params with a different truncation bound.
    pub fn with_n_max(mut self, n_max: usize) -> Result<Self> {
        self.n_max = n_max;
        self.validated()
    }

    /// Same params with a different mean pair number.
    pub fn with_nbar(mut self, nbar: f64) -> Result<Self> {
        self.nbar = nbar;
        self.validated()
    }

    /// Same params with a different multiplexing depth.
    pub fn with_depth(mut self, m: u32) -> Result<Self> {
        self.m = m;
        self.validated()
    }

    /// The unswitched reference source against which improvement factors
    /// are measured: a single pulse per bin and no switch network at all
    /// (`m = 1`, `η_L = 1`), with the same detector and truncation.
    pub fn unswitched_baseline(&self) -> Self {
        Self {
            eta_l: 1.0,
            m: 1,
            ..*self
        }
    }

    pub(crate) fn validated(self) -> Result<Self> {
        if !self.nbar.is_finite() || self.nbar < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "mean pair number {} must be finite and ≥ 0",
                self.nbar
            )));
        }
        for (name, eta) in [("eta_d", self.eta_d), ("eta_l", self.eta_l)] {
            if !(0.0..=1.0).contains(&eta) {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {eta} outside [0, 1]"
                )));
            }
        }
        if self.m < 1 {
            return Err(Error::InvalidParameter(
                "multiplexing depth m must be ≥ 1".into(),
            ));
        }
        if self.n_max < 1 || self.n_max > MAX_N_MAX {
            return Err(Error::InvalidParameter(format!(
                "n_max {} outside supported range [1, {MAX_N_MAX}]",
                self.n_max
            )));
        }
        Ok(self)
    }
}

/// Parameters of the spatial-multiplexing comparison scheme: a binary tree
/// of depth `d` combining `2^d` identical sources through `d` switch layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialParams {
    /// Binary-tree depth; the scheme uses `2^d` sources and `2^d − 1` switches.
    pub d: u32,
    pub nbar: f64,
    pub eta_d: f64,
    pub eta_l: f64,
    pub n_max: usize,
}

impl SpatialParams {
    pub fn new(nbar: f64, eta_d: f64, eta_l: f64, d: u32) -> Result<Self> {
        Self {
            d,
            nbar,
            eta_d,
            eta_l,
            n_max: DEFAULT_N_MAX,
        }
        .validated()
    }

    pub fn with_n_max(mut self, n_max: usize) -> Result<Self> {
        self.n_max = n_max;
        self.validated()
    }

    pub fn with_nbar(mut self, nbar: f64) -> Result<Self> {
        self.nbar = nbar;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        if self.d > 30 {
            return Err(Error::InvalidParameter(format!(
                "tree depth {} unsupported (2^d sources overflows any sane budget)",
                self.d
            )));
        }
        // Reuse the scalar checks; depth m is irrelevant here.
        let _ = SourceParams {
            nbar: self.nbar,
            eta_d: self.eta_d,
            eta_l: self.eta_l,
            m: 1,
            n_max: self.n_max,
        }
        .validated()?;
        Ok(self)
    }

    /// Number of sources in the tree.
    pub fn sources(&self) -> u64 {
        1u64 << self.d
    }

    /// Number of 2×2 switches in the tree.
    pub fn switches(&self) -> u64 {
        self.sources() - 1
    }
}

/// Conditional idler state for one pulse slot, after storage until the
/// output bin closes.
#[derive(Debug, Clone, PartialEq)]
pub struct HeraldedState {
    /// Pulse index within the bin, `1..=m`.
    pub t: u32,
    /// Probability that the heralding detector reports exactly one photon
    /// on this pulse.
    pub herald_prob: f64,
    /// Normalized idler distribution after `passes(t, m)` loop transits;
    /// `None` when the herald probability is zero.
    pub idler_dist: Option<PhotonNumberDist>,
}

/// Per-pulse contribution to the bin totals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseContribution {
    pub t: u32,
    /// Probability this pulse heralds AND delivers exactly one photon.
    pub p_success_t: f64,
    /// Probability this pulse heralds AND delivers two or more photons.
    pub p_noise_t: f64,
}

/// Success, noise, and SNR of a configuration, with the per-pulse breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct MuxPerformance {
    /// Probability the output bin delivers exactly one photon (union over
    /// pulses of independent per-pulse successes).
    pub p_success: f64,
    /// Probability the output bin delivers two or more photons.
    pub p_noise: f64,
    /// `p_success / p_noise`; `f64::INFINITY` when `p_noise` is zero.
    pub snr: f64,
    pub per_pulse: Vec<PulseContribution>,
}

/// How an improvement factor compares a multiplexed device to the
/// unswitched reference source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImprovementMode {
    /// Both devices pumped at the same mean pair number.
    FixedNbar,
    /// Each device's n̄ solved separately so both operate at the target SNR.
    FixedSnr { target: f64 },
}

/// Number of switch/loop transits for a photon heralded on pulse `t` of an
/// `m`-pulse bin: `m − t + 1`. The final pulse is routed straight through
/// to the output and still transits the switch once.
pub fn passes(t: u32, m: u32) -> Result<u32> {
    if t < 1 || t > m {
        return Err(Error::InvalidParameter(format!(
            "pulse index {t} outside [1, {m}]"
        )));
    }
    Ok(m - t + 1)
}

/// Herald probability and stored conditional idler state for pulse `t`.
///
/// Builds the thermal pair state, conditions on a single-photon detector
/// report, then applies loop loss with transmission `η_L^passes(t, m)`.
pub fn heralded_idler_after_storage(params: &SourceParams, t: u32) -> Result<HeraldedState> {
    let n_passes = passes(t, params.m)?;
    let state = JointPairState::thermal(params.nbar, params.n_max)?;
    let detector = DetectorModel::pnr(params.eta_d)?;
    let heralded = pnr_herald(&state, &detector, 1)?;
    let idler_dist = match heralded.idler {
        Some(conditional) => Some(binomial_loss(
            &conditional,
            params.eta_l.powi(n_passes as i32),
        )?),
        None => None,
    };
    Ok(HeraldedState {
        t,
        herald_prob: heralded.herald_prob,
        idler_dist,
    })
}

/// Probability that pulse `t` heralds and its stored idler arrives as
/// exactly one photon: `P(herald) × ⟨1|ρ̂|1⟩` of the normalized stored state.
pub fn p_success_t(params: &SourceParams, t: u32) -> Result<f64> {
    let h = heralded_idler_after_storage(params, t)?;
    Ok(match h.idler_dist {
        Some(d) => h.herald_prob * d.get(1),
        None => 0.0,
    })
}

/// Full per-bin performance: per-pulse contributions and their combination
///
/// `p = 1 − Π_t (1 − p_t)`
///
/// for both success (exactly one delivered photon) and noise (two or more).
/// Pulses are treated as independent delivery opportunities; see the
/// Monte Carlo module for the physically motivated replacement variant.
pub fn performance(params: &SourceParams) -> Result<MuxPerformance> {
    // The pre-loss herald statistics are identical for every pulse; only
    // the number of storage passes differs.
    let state = JointPairState::thermal(params.nbar, params.n_max)?;
    let detector = DetectorModel::pnr(params.eta_d)?;
    let heralded = pnr_herald(&state, &detector, 1)?;

    let mut per_pulse = Vec::with_capacity(params.m as usize);
    let mut miss_success = 1.0;
    let mut miss_noise = 1.0;
    for t in 1..=params.m {
        let (ps_t, pn_t) = match &heralded.idler {
            Some(conditional) => {
                let transmission = params.eta_l.powi(passes(t, params.m)? as i32);
                let stored = binomial_loss(conditional, transmission)?;
                (
                    heralded.herald_prob * stored.get(1),
                    heralded.herald_prob * stored.multi_photon_mass(),
                )
            }
            None => (0.0, 0.0),
        };
        per_pulse.push(PulseContribution {
            t,
            p_success_t: ps_t,
            p_noise_t: pn_t,
        });
        miss_success *= 1.0 - ps_t;
        miss_noise *= 1.0 - pn_t;
    }
    let p_success = 1.0 - miss_success;
    let p_noise = 1.0 - miss_noise;
    Ok(MuxPerformance {
        p_success,
        p_noise,
        snr: if p_noise > 0.0 {
            p_success / p_noise
        } else {
            f64::INFINITY
        },
        per_pulse,
    })
}

/// Probability that the output bin delivers exactly one photon.
pub fn p_success(params: &SourceParams) -> Result<f64> {
    Ok(performance(params)?.p_success)
}

/// Probability that the output bin delivers two or more photons. The
/// herald factor is included, mirroring the success definition, so the two
/// quantities are directly comparable.
pub fn p_noise(params: &SourceParams) -> Result<f64> {
    Ok(performance(params)?.p_noise)
}

/// Signal-to-noise ratio `p_success / p_noise`. Zero noise (e.g. `n_max = 1`
/// or a fully blocked loop) is reported as `f64::INFINITY`, not an error.
pub fn snr(params: &SourceParams) -> Result<f64> {
    Ok(performance(params)?.snr)
}

/// First-order closed form for the bin success probability, keeping only
/// single-pair terms:
///
/// `p = 1 − Π_{t=1}^{m} (1 − p₁ η_d η_L^t)`  with  `p₁ = n̄/(n̄+1)²`.
///
/// Exact when `n_max = 1`; an overestimate check against the full
/// computation is provided by [`truncation_delta`].
pub fn analytic_p_success(params: &SourceParams) -> Result<f64> {
    let p1 = thermal_pmf(params.nbar, 1)?.get(1);
    let mut miss = 1.0;
    for t in 1..=params.m {
        miss *= 1.0 - p1 * params.eta_d * params.eta_l.powi(t as i32);
    }
    Ok(1.0 - miss)
}

/// Truncation error of the full computation relative to the single-pair
/// closed form: `Δ_p(n_max) = p_success(n_max) − analytic_p_success`,
/// evaluated for each requested truncation bound.
pub fn truncation_delta(params: &SourceParams, n_max_list: &[usize]) -> Result<Vec<(usize, f64)>> {
    let analytic = analytic_p_success(params)?;
    n_max_list
        .iter()
        .map(|&n_max| {
            let p = p_success(&params.with_n_max(n_max)?)?;
            Ok((n_max, p - analytic))
        })
        .collect()
}

/// Large-depth limit of the success-probability gain over the unswitched
/// source: `η_L / (1 − η_L)`, valid in the low-pump regime (n̄ ≲ 0.01)
/// where per-pulse successes are rare.
pub fn asymptotic_gain(eta_l: f64) -> Result<f64> {
    if !(eta_l > 0.0 && eta_l < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "asymptotic gain defined for 0 < η_L < 1, got {eta_l}"
        )));
    }
    Ok(eta_l / (1.0 - eta_l))
}

const SOLVER_NBAR_LO: f64 = 1e-6;
const SOLVER_NBAR_HI: f64 = 1.0;
const SOLVER_REL_TOL: f64 = 1e-3;
const SOLVER_MAX_ITERS: u32 = 200;

/// Bisection on log₁₀(n̄) for a target SNR, generic over the device model.
fn solve_nbar_generic(snr_of_nbar: impl Fn(f64) -> Result<f64>, target_snr: f64) -> Result<f64> {
    if !target_snr.is_finite() || target_snr <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "target SNR must be finite and > 1, got {target_snr}"
        )));
    }
    let snr_at_lo_nbar = snr_of_nbar(SOLVER_NBAR_LO)?;
    let snr_at_hi_nbar = snr_of_nbar(SOLVER_NBAR_HI)?;
    // SNR must fall as the pump increases; the bracket endpoints are the
    // cheapest place to catch a model that violates that. The negated
    // comparison is deliberate: a NaN endpoint must land here, not bisect.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(snr_at_lo_nbar > snr_at_hi_nbar) {
        return Err(Error::NonMonotoneBracket {
            snr_at_lo_nbar,
            snr_at_hi_nbar,
        });
    }
    if target_snr > snr_at_lo_nbar || target_snr < snr_at_hi_nbar {
        return Err(Error::NoSolution {
            target: target_snr,
            snr_at_lo_nbar,
            snr_at_hi_nbar,
        });
    }
    let mut lo_log = SOLVER_NBAR_LO.log10();
    let mut hi_log = SOLVER_NBAR_HI.log10();
    for _ in 0..SOLVER_MAX_ITERS {
        let mid_log = 0.5 * (lo_log + hi_log);
        let nbar = 10f64.powf(mid_log);
        let s = snr_of_nbar(nbar)?;
        if ((s - target_snr) / target_snr).abs() < SOLVER_REL_TOL {
            return Ok(nbar);
        }
        if s > target_snr {
            // Still too clean — push the pump harder.
            lo_log = mid_log;
        } else {
            hi_log = mid_log;
        }
    }
    Err(Error::InvalidParameter(format!(
        "SNR bisection did not converge to {target_snr} within {SOLVER_MAX_ITERS} iterations"
    )))
}

/// Solves for the mean pair number at which the device operates at
/// `target_snr`, by bisection on log₁₀(n̄) over [1e-6, 1] to 0.1% relative
/// tolerance. The `nbar` field of `params` is ignored.
pub fn solve_nbar_for_snr(params: &SourceParams, target_snr: f64) -> Result<f64> {
    solve_nbar_generic(|nbar| snr(&params.with_nbar(nbar)?), target_snr)
}

/// [`solve_nbar_for_snr`] for the spatial comparison scheme.
pub fn solve_spatial_nbar_for_snr(params: &SpatialParams, target_snr: f64) -> Result<f64> {
    solve_nbar_generic(
        |nbar| Ok(spatial_performance(&params.with_nbar(nbar)?)?.snr),
        target_snr,
    )
}

/// Success-probability gain of a multiplexed device over the unswitched
/// reference source (single pulse per bin, no switch network — see
/// [`SourceParams::unswitched_baseline`]).
///
/// In `FixedNbar` mode both devices run at `device.nbar`; in `FixedSnr`
/// mode each device's pump is solved separately for the target SNR before
/// comparing delivery probabilities. Note the m = 1 device is *not* the
/// reference: it still pays one switch transit, so its fixed-n̄ improvement
/// is `η_L`, not 1.
pub fn improvement_factor(device: &SourceParams, mode: ImprovementMode) -> Result<f64> {
    let baseline = device.unswitched_baseline();
    let (p_device, p_base) = match mode {
        ImprovementMode::FixedNbar => (p_success(device)?, p_success(&baseline)?),
        ImprovementMode::FixedSnr { target } => {
            let nbar_device = solve_nbar_for_snr(device, target)?;
            let nbar_base = solve_nbar_for_snr(&baseline, target)?;
            (
                p_success(&device.with_nbar(nbar_device)?)?,
                p_success(&baseline.with_nbar(nbar_base)?)?,
            )
        }
    };
    if p_base <= 0.0 {
        return Err(Error::InvalidParameter(
            "reference source has zero success probability".into(),
        ));
    }
    Ok(p_device / p_base)
}

/// Per-bin performance of the spatial binary-tree scheme: `2^d` sources
/// herald independently and a delivered photon crosses `d` switch layers
/// (`max(d, 1)` transits, so `d = 0` bears one transit and coincides with
/// the temporal scheme at `m = 1`).
pub fn spatial_performance(params: &SpatialParams) -> Result<MuxPerformance> {
    let state = JointPairState::thermal(params.nbar, params.n_max)?;
    let detector = DetectorModel::pnr(params.eta_d)?;
    let heralded = pnr_herald(&state, &detector, 1)?;
    let (ps_single, pn_single) = match &heralded.idler {
        Some(conditional) => {
            let transmission = params.eta_l.powi(params.d.max(1) as i32);
            let delivered = binomial_loss(conditional, transmission)?;
            (
                heralded.herald_prob * delivered.get(1),
                heralded.herald_prob * delivered.multi_photon_mass(),
            )
        }
        None => (0.0, 0.0),
    };
    let sources = params.sources() as i32;
    let p_success = 1.0 - (1.0 - ps_single).powi(sources);
    let p_noise = 1.0 - (1.0 - pn_single).powi(sources);
    Ok(MuxPerformance {
        p_success,
        p_noise,
        snr: if p_noise > 0.0 {
            p_success / p_noise
        } else {
            f64::INFINITY
        },
        per_pulse: vec![PulseContribution {
            t: 1,
            p_success_t: ps_single,
            p_noise_t: pn_single,
        }],
    })
}

/// Probability that the spatial scheme delivers exactly one photon.
pub fn spatial_p_success(params: &SpatialParams) -> Result<f64> {
    Ok(spatial_performance(params)?.p_success)
}

/// [`improvement_factor`] for the spatial scheme, against the same
/// unswitched reference source.
pub fn spatial_improvement_factor(params: &SpatialParams, mode: ImprovementMode) -> Result<f64> {
    let baseline = SourceParams {
        nbar: params.nbar,
        eta_d: params.eta_d,
        eta_l: 1.0,
        m: 1,
        n_max: params.n_max,
    };
    let (p_device, p_base) = match mode {
        ImprovementMode::FixedNbar => (spatial_p_success(params)?, p_success(&baseline)?),
        ImprovementMode::FixedSnr { target } => {
            let nbar_device = solve_spatial_nbar_for_snr(params, target)?;
            let nbar_base = solve_nbar_for_snr(&baseline, target)?;
            (
                spatial_p_success(&params.with_nbar(nbar_device)?)?,
                p_success(&baseline.with_nbar(nbar_base)?)?,
            )
        }
    };
    if p_base <= 0.0 {
        return Err(Error::InvalidParameter(
            "reference source has zero success probability".into(),
        ));
    }
    Ok(p_device / p_base)
}

/// Expected time to collect one photon from each of `n` independent copies
/// of the device, pumped at `rep_rate_hz`. Output bins open at rate
/// `R_p / m`, and all `n` devices must succeed in the same bin:
///
/// `T = m / (R_p · p_success^n)`
///
/// (for an unswitched source this is `1 / (R_p · p₁^n)`). Zero success
/// probability yields `f64::INFINITY`.
pub fn waiting_time(params: &SourceParams, n: u32, rep_rate_hz: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter("photon count n must be ≥ 1".into()));
    }
    if !rep_rate_hz.is_finite() || rep_rate_hz <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "repetition rate {rep_rate_hz} Hz must be finite and > 0"
        )));
    }
    let p = p_success(params)?;
    if p <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(params.m as f64 / (rep_rate_hz * p.powi(n as i32)))
}
