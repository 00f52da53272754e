//! Error type shared across the crate.

use crate::limits::LimitKind;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A physical input parameter is outside its admissible domain
    /// (non-positive wavelength, intensity, frequency, field or I_p).
    #[error("domain error: {0}")]
    Domain(String),

    /// A scan specification is degenerate (empty range, too few points).
    #[error("invalid scan specification: {0}")]
    ScanSpec(String),

    /// An asymptotic limit is structurally undefined at the requested
    /// momentum (for example the high-energy limit below its arccosh
    /// threshold k_par^2 = 4 U_p).
    #[error("{limit:?} limit undefined here: {reason}")]
    LimitUndefined { limit: LimitKind, reason: String },

    /// Newton iteration for the numeric transition point did not converge.
    #[error("transition-point search failed: {0}")]
    OracleConvergence(String),

    /// The 64- and 128-node quadratures of the action disagree beyond
    /// tolerance; the integrand was not resolved.
    #[error("quadrature resolution failure: 64/128-node relative disagreement {rel:e}")]
    QuadratureResolution { rel: f64 },

    /// An internal invariant was violated. Indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
