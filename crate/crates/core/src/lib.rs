//! Performance model for temporally loop-multiplexed heralded single-photon
//! sources.
//!
//! A pulsed photon-pair source with thermal pair statistics is heralded by a
//! lossy photon-number-resolving detector; heralded idlers are stored in a
//! switched fibre loop and released once per `m` pump pulses. The crate
//! computes the probability that such an output bin delivers exactly one
//! photon ([`mux::p_success`]), the multi-photon noise probability
//! ([`mux::p_noise`]), their ratio ([`mux::snr`]), SNR-constrained operating
//! points, improvement factors over an unswitched source, a spatial
//! binary-tree comparison scheme, and photon-delivery waiting times — plus
//! an independent event-level Monte Carlo simulator ([`mc::run_mc`]) used to
//! validate every closed form.
//!
//! All distributions are photon-number diagonal: thermal input, beam-splitter
//! loss, and number-resolved conditioning never create Fock-basis coherences,
//! so states live in [`fock::PhotonNumberDist`] rather than full density
//! matrices.

pub mod error;
pub mod fock;
pub mod mc;
pub mod mux;

pub use error::{Error, Result};
pub use fock::{
    binomial_loss, pnr_herald, thermal_pmf, DetectorModel, HeraldOutcome, JointPairState,
    PhotonNumberDist, DEFAULT_N_MAX, MAX_N_MAX,
};
pub use mc::{run_mc, McConfig, McResult, Semantics};
pub use mux::{
    analytic_p_success, asymptotic_gain, heralded_idler_after_storage, improvement_factor, p_noise,
    p_success, p_success_t, passes, performance, snr, solve_nbar_for_snr,
    solve_spatial_nbar_for_snr, spatial_improvement_factor, spatial_p_success, spatial_performance,
    truncation_delta, waiting_time, HeraldedState, ImprovementMode, MuxPerformance,
    PulseContribution, SourceParams, SpatialParams,
};
