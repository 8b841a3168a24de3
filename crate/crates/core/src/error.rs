//! Error types shared by the whole crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building states or solving for
/// operating points.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A constructor or operation received an argument outside its domain
    /// (negative probability, efficiency outside [0, 1], depth of zero, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The SNR solver's bracket does not contain the requested target.
    /// Carries the SNR at both bracket endpoints so callers can report how
    /// far off the target was.
    #[error(
        "no solution: target SNR {target} outside bracket range \
         [{snr_at_hi_nbar}, {snr_at_lo_nbar}] (SNR at n̄=1 and n̄=1e-6)"
    )]
    NoSolution {
        target: f64,
        /// SNR evaluated at the lower bracket endpoint (n̄ = 1e-6).
        snr_at_lo_nbar: f64,
        /// SNR evaluated at the upper bracket endpoint (n̄ = 1).
        snr_at_hi_nbar: f64,
    },

    /// The SNR was not strictly decreasing across the solver bracket, so
    /// bisection would be meaningless. Not expected for physical parameter
    /// sets; surfaced as a diagnostic rather than a panic.
    #[error(
        "SNR not monotone over bracket: snr(n̄=1e-6) = {snr_at_lo_nbar}, \
         snr(n̄=1) = {snr_at_hi_nbar}"
    )]
    NonMonotoneBracket {
        snr_at_lo_nbar: f64,
        snr_at_hi_nbar: f64,
    },
}
