//! Strong-field ionization rates with full dependence on the electron's
//! drift momentum and the instantaneous laser phase.
//!
//! The library evaluates, in atomic units and at exponential accuracy, the
//! instantaneous single-electron ionization rate of an atom in a linearly
//! polarized laser field,
//!
//! ```text
//! Gamma(gamma, k_par, k_perp) ∝ exp[ -(2 I_p / omega) f(gamma, k_par, k_perp) ],
//! ```
//!
//! valid for any Keldysh parameter and any final momentum. Around the
//! closed-form exponent sit:
//!
//! - [`units`]: laboratory-to-atomic-unit conversions and field parameters,
//! - [`rate`]: the exponent, log-rate, complex transition point and the
//!   phase-resolved rate,
//! - [`limits`]: the classical tunneling, transverse, high-energy and
//!   quadratic-expansion formulas recovered from the general exponent, with
//!   an agreement harness,
//! - [`oracle`]: an independent saddle-point/quadrature verification of the
//!   exponent,
//! - [`scan`]: deterministic spectrum grids, phase scans, normalized cuts
//!   and the 2 U_p knee detector.
//!
//! Rates are handled in the log domain throughout; nothing here
//! exponentiates.

pub mod error;
pub mod limits;
pub mod oracle;
pub mod rate;
pub mod scan;
pub mod units;

pub use error::{Error, Result};
pub use rate::{AlphaBeta, DriftMomentum, RateEval, TransitionPoint};
pub use units::{LabLaser, LaserField, Target};
