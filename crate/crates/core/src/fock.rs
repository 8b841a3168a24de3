//! Photon-number distributions and the operations that act on them:
//! thermal-state generation, binomial loss channels, and photon-number-
//! resolving (PNR) heralding.
//!
//! Everything in this model is diagonal in the Fock basis — thermal input,
//! beam-splitter loss, and number-resolved conditioning never create
//! coherences — so a "density matrix" here is just a probability mass
//! function over photon number, truncated at `n_max`.

use crate::error::{Error, Result};

/// Hard ceiling on the truncation bound. The binomial table is precomputed
/// up to this order; beyond it, `f64` binomials start losing integer
/// precision anyway.
pub const MAX_N_MAX: usize = 64;

/// Default truncation used across the crate. Amplitudes above five photon
/// pairs contribute nothing at the mean photon numbers this model targets
/// (n̄ ≲ 1).
pub const DEFAULT_N_MAX: usize = 5;

static BINOMIAL_TABLE: std::sync::OnceLock<Vec<Vec<f64>>> = std::sync::OnceLock::new();

/// Binomial coefficient C(n, k) from a precomputed Pascal triangle,
/// `n ≤ 64`. Entries are exact in `f64` up to n = 56 and accurate to one
/// part in 2^52 beyond that — far tighter than anything else in a
/// probability computation. Returns 0 for `k > n`; callers validate
/// `n ≤ MAX_N_MAX` when constructing distributions.
pub(crate) fn choose(n: usize, k: usize) -> f64 {
    let table = BINOMIAL_TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(MAX_N_MAX + 1);
        for n in 0..=MAX_N_MAX {
            let mut row = vec![0.0; n + 1];
            row[0] = 1.0;
            row[n] = 1.0;
            for k in 1..n {
                row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    });
    if k > n {
        0.0
    } else {
        table[n][k]
    }
}

/// A truncated probability mass function over photon number `n = 0..=n_max`.
///
/// Entries are probabilities, not amplitudes. The total mass may be below 1:
/// thermal states are truncated without renormalization, so the missing tail
/// mass is simply dropped. Conditional (post-herald) distributions are
/// normalized, because conditioning divides by the trace.
#[derive(Debug, Clone, PartialEq)]
pub struct PhotonNumberDist {
    probs: Vec<f64>,
}

impl PhotonNumberDist {
    /// Builds a distribution from `probs[n] = P(n photons)`, `n = 0..=n_max`.
    ///
    /// Requires every entry in [0, 1], total mass ≤ 1 (within 1e-12), and
    /// `1 ≤ n_max ≤ 64` (i.e. `2 ≤ probs.len() ≤ 65`).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.len() < 2 {
            return Err(Error::InvalidParameter(
                "photon-number distribution needs n_max ≥ 1".into(),
            ));
        }
        if probs.len() > MAX_N_MAX + 1 {
            return Err(Error::InvalidParameter(format!(
                "n_max {} exceeds the supported maximum {MAX_N_MAX}",
                probs.len() - 1
            )));
        }
        let mut total = 0.0;
        for (n, &p) in probs.iter().enumerate() {
            if !(0.0..=1.0 + 1e-12).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "probability of {n} photons is {p}, outside [0, 1]"
                )));
            }
            total += p;
        }
        if total > 1.0 + 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "total probability mass {total} exceeds 1"
            )));
        }
        Ok(Self { probs })
    }

    /// Internal constructor for values already guaranteed valid by the
    /// producing computation (loss channels, normalization).
    pub(crate) fn new_unchecked(probs: Vec<f64>) -> Self {
        debug_assert!(probs.len() >= 2 && probs.len() <= MAX_N_MAX + 1);
        Self { probs }
    }

    /// Truncation bound: the largest representable photon number.
    pub fn n_max(&self) -> usize {
        self.probs.len() - 1
    }

    /// The raw mass function, indexed by photon number.
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// `P(n photons)`; zero beyond the truncation bound.
    pub fn get(&self, n: usize) -> f64 {
        self.probs.get(n).copied().unwrap_or(0.0)
    }

    /// Total probability mass (≤ 1; < 1 for truncated states).
    pub fn total_mass(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Mean photon number `Σ n·P(n)` of the truncated distribution.
    pub fn mean(&self) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .map(|(n, &p)| n as f64 * p)
            .sum()
    }

    /// Probability of delivering two or more photons, `Σ_{n≥2} P(n)`.
    pub fn multi_photon_mass(&self) -> f64 {
        self.probs.iter().skip(2).sum()
    }

    /// Rescales to unit mass. Errors on an all-zero distribution.
    pub fn normalized(&self) -> Result<Self> {
        let mass = self.total_mass();
        if mass <= 0.0 {
            return Err(Error::InvalidParameter(
                "cannot normalize a zero-mass distribution".into(),
            ));
        }
        Ok(Self::new_unchecked(
            self.probs.iter().map(|p| p / mass).collect(),
        ))
    }
}

/// A photon-pair state with perfect signal/idler number correlation:
/// `pair_probs[n]` is the probability that the pulse holds exactly `n`
/// signal photons *and* `n` idler photons. Both marginals equal
/// `pair_probs` by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPairState {
    pair_probs: PhotonNumberDist,
}

impl JointPairState {
    /// Pair state of a pulsed spontaneous pair source with mean pair number
    /// `nbar`, truncated at `n_max`.
    pub fn thermal(nbar: f64, n_max: usize) -> Result<Self> {
        Ok(Self {
            pair_probs: thermal_pmf(nbar, n_max)?,
        })
    }

    /// Wraps an arbitrary number distribution as a perfectly correlated
    /// pair state.
    pub fn from_marginal(marginal: PhotonNumberDist) -> Self {
        Self {
            pair_probs: marginal,
        }
    }

    pub fn pair_probs(&self) -> &PhotonNumberDist {
        &self.pair_probs
    }

    pub fn n_max(&self) -> usize {
        self.pair_probs.n_max()
    }
}

/// Heralding detector model: each incident photon is registered
/// independently with probability `efficiency`. No dark counts, no
/// saturation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorModel {
    efficiency: f64,
    resolving: bool,
}

impl DetectorModel {
    /// A photon-number-resolving detector with the given efficiency.
    pub fn pnr(efficiency: f64) -> Result<Self> {
        Self::new(efficiency, true)
    }

    pub fn new(efficiency: f64, resolving: bool) -> Result<Self> {
        if !(0.0..=1.0).contains(&efficiency) {
            return Err(Error::InvalidParameter(format!(
                "detector efficiency {efficiency} outside [0, 1]"
            )));
        }
        Ok(Self {
            efficiency,
            resolving,
        })
    }

    pub fn efficiency(&self) -> f64 {
        self.efficiency
    }

    /// Whether the detector reports exact photon counts. Binary (click /
    /// no-click) detectors are an extension point; the heralding logic in
    /// this crate requires number resolution.
    pub fn resolving(&self) -> bool {
        self.resolving
    }
}

/// Result of conditioning a pair state on a PNR detection outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct HeraldOutcome {
    /// Probability that the detector reports exactly the requested count.
    pub herald_prob: f64,
    /// Normalized idler distribution given that report; `None` when the
    /// herald probability is zero and the conditional state is undefined.
    pub idler: Option<PhotonNumberDist>,
}

/// Thermal (geometric) photon-number statistics with mean `nbar`:
/// `P(n) = (1/(n̄+1)) (n̄/(n̄+1))^n`, truncated at `n_max`.
///
/// The tail mass beyond `n_max` is dropped, not redistributed, so the
/// result sums to slightly less than 1 for any `nbar > 0`. Downstream
/// truncation-error analysis depends on this behaviour.
pub fn thermal_pmf(nbar: f64, n_max: usize) -> Result<PhotonNumberDist> {
    if !nbar.is_finite() || nbar < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "mean photon number {nbar} must be finite and ≥ 0"
        )));
    }
    if !(1..=MAX_N_MAX).contains(&n_max) {
        return Err(Error::InvalidParameter(format!(
            "n_max {n_max} outside supported range [1, {MAX_N_MAX}]"
        )));
    }
    let ratio = nbar / (nbar + 1.0);
    let mut probs = Vec::with_capacity(n_max + 1);
    let mut p = 1.0 / (nbar + 1.0);
    for _ in 0..=n_max {
        probs.push(p);
        p *= ratio;
    }
    Ok(PhotonNumberDist::new_unchecked(probs))
}

/// Transmits a photon-number distribution through a beam-splitter loss
/// channel with transmission `eta`: each photon survives independently,
/// so `out[k] = Σ_{n≥k} P(n) C(n,k) η^k (1−η)^{n−k}`.
///
/// Total mass is preserved exactly (loss moves probability toward lower
/// photon numbers, it does not destroy it). Composing two channels is the
/// same as one channel with the product transmission.
#[allow(clippy::needless_range_loop)] // indices mirror the summation
pub fn binomial_loss(dist: &PhotonNumberDist, eta: f64) -> Result<PhotonNumberDist> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidParameter(format!(
            "transmission {eta} outside [0, 1]"
        )));
    }
    let n_max = dist.n_max();
    let mut out = vec![0.0; n_max + 1];
    for n in 0..=n_max {
        let p = dist.get(n);
        if p == 0.0 {
            continue;
        }
        for k in 0..=n {
            // 0^0 = 1 via powi, so eta = 0 and eta = 1 need no special-casing.
            out[k] += p * choose(n, k) * eta.powi(k as i32) * (1.0 - eta).powi((n - k) as i32);
        }
    }
    Ok(PhotonNumberDist::new_unchecked(out))
}

/// Conditions a correlated pair state on the heralding detector reporting
/// exactly `k` photons in the signal arm.
///
/// Returns the herald probability
/// `P(report k) = Σ_n pair_probs[n] C(n,k) η_d^k (1−η_d)^{n−k}`
/// together with the normalized idler distribution given that report.
/// The idler keeps all `n` photons of the generating event — detecting the
/// signal does not remove idler photons — so multi-pair events contaminate
/// the `k = 1` herald whenever `η_d < 1`.
///
/// Requesting `k > n_max` is not an error; it simply has zero probability.
#[allow(clippy::needless_range_loop)] // indices mirror the summation
pub fn pnr_herald(
    state: &JointPairState,
    detector: &DetectorModel,
    k: usize,
) -> Result<HeraldOutcome> {
    if !detector.resolving() {
        return Err(Error::InvalidParameter(
            "heralding requires a number-resolving detector".into(),
        ));
    }
    let n_max = state.n_max();
    let eta = detector.efficiency();
    let mut weights = vec![0.0; n_max + 1];
    let mut herald_prob = 0.0;
    for n in k..=n_max {
        let w = state.pair_probs().get(n)
            * choose(n, k)
            * eta.powi(k as i32)
            * (1.0 - eta).powi((n - k) as i32);
        weights[n] = w;
        herald_prob += w;
    }
    let idler = if herald_prob > 0.0 {
        for w in &mut weights {
            *w /= herald_prob;
        }
        Some(PhotonNumberDist::new_unchecked(weights))
    } else {
        None
    };
    Ok(HeraldOutcome { herald_prob, idler })
}
