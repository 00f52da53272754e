//! The instantaneous ionization rate with full dependence on the drift
//! momentum and the laser phase.
//!
//! Everything here is exact in the saddle-point sense: the rate is
//! `Gamma ∝ exp[-(2 I_p / omega) f(gamma, k_par, k_perp)]` with a closed-form
//! exponent `f`, and the library works with `log Gamma` throughout. The
//! proportionality constant is fixed to one; only rate ratios are physical.
//!
//! The exponent comes from the imaginary part of the action integrated from
//! the real axis to the complex transition time t0 at which the bound and
//! continuum energies coincide. Writing
//!
//! ```text
//! x = gamma k_par / sqrt(2 I_p),   y = gamma sqrt(1 + k_perp^2 / (2 I_p)),
//! ```
//!
//! the transition phase is `omega t0 = Arcsin(x + i y)`, split into real and
//! imaginary parts through
//!
//! ```text
//! alpha, beta = [sqrt((x+1)^2 + y^2) +- sqrt((x-1)^2 + y^2)] / 2,
//! omega t0    = arcsin(beta) + i arccosh(alpha).
//! ```

use crate::error::{Error, Result};
use crate::units::{LaserField, Target};

/// Canonical (drift) momentum of the outgoing electron, a.u.
///
/// `k_perp` is the magnitude of the momentum perpendicular to the
/// polarization axis; the problem is cylindrically symmetric about that
/// axis, so a signed input is normalized to its absolute value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftMomentum {
    k_par: f64,
    k_perp: f64,
}

impl DriftMomentum {
    pub fn new(k_par: f64, k_perp: f64) -> Self {
        Self { k_par, k_perp: k_perp.abs() }
    }

    pub fn zero() -> Self {
        Self { k_par: 0.0, k_perp: 0.0 }
    }

    /// Momentum along the polarization axis (signed), a.u.
    pub fn k_par(&self) -> f64 {
        self.k_par
    }

    /// Momentum magnitude perpendicular to the polarization axis, a.u.
    pub fn k_perp(&self) -> f64 {
        self.k_perp
    }

    /// k^2 = k_par^2 + k_perp^2.
    pub fn k_squared(&self) -> f64 {
        self.k_par * self.k_par + self.k_perp * self.k_perp
    }
}

/// The pair entering the Arcsin decomposition. `alpha > 1` for any physical
/// input and `|beta| <= 1`; they satisfy `alpha beta = x` and
/// `alpha^2 + beta^2 = 1 + x^2 + y^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaBeta {
    pub alpha: f64,
    pub beta: f64,
}

/// Complex transition phase omega * t0, upper half-plane branch closest to
/// the real axis: `re_phase = arcsin(beta)` in [-pi/2, pi/2] and
/// `im_phase = arccosh(alpha) > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionPoint {
    pub re_phase: f64,
    pub im_phase: f64,
}

/// One full rate evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateEval {
    /// Dimensionless exponent f >= 0.
    pub f: f64,
    /// ln Gamma up to an additive constant: -(2 I_p / omega) f.
    pub log_rate: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Saddle geometry shared by the exponent, the transition point and the
/// oracle checks.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SaddleGeometry {
    pub alpha: f64,
    pub beta: f64,
    /// sinh(arccosh alpha) = sqrt(alpha^2 - 1), computed as y / sqrt(1 - beta^2)
    /// which is exact at k = 0 and avoids the alpha -> 1 cancellation.
    pub sinh_im: f64,
}

pub(crate) fn saddle_geometry(gamma: f64, k: DriftMomentum, ip: f64) -> SaddleGeometry {
    debug_assert!(gamma > 0.0 && ip > 0.0);
    let sqrt_2ip = (2.0 * ip).sqrt();
    let x = gamma * (k.k_par / sqrt_2ip);
    let y = gamma * (1.0 + k.k_perp * k.k_perp / (2.0 * ip)).sqrt();
    let xp = x + 1.0;
    let xm = x - 1.0;
    let r1 = (xp * xp + y * y).sqrt();
    let r2 = (xm * xm + y * y).sqrt();
    // r1 + r2 >= |x+1| + |1-x| >= 2, so alpha >= 1 up to rounding.
    let alpha = 0.5 * (r1 + r2);
    // beta = (r1 - r2)/2 algebraically; dividing x by alpha evaluates the
    // same quantity without the r1 - r2 cancellation at small k_par.
    let beta = (x / alpha).clamp(-1.0, 1.0);
    let sinh_im = y / (1.0 - beta * beta).sqrt();
    debug_assert!({
        let blk = alpha_beta_general_block(gamma, k, ip);
        (blk.alpha - alpha).abs() <= 1e-12 * alpha && (blk.beta - beta).abs() <= 1e-12
    });
    debug_assert!(
        (arccosh_guarded(alpha).expect("alpha >= 1 by construction") - sinh_im.asinh()).abs()
            <= 1e-12 * sinh_im.asinh().max(1.0)
    );
    SaddleGeometry { alpha, beta, sinh_im }
}

/// alpha and beta for the given Keldysh parameter, drift momentum and I_p.
pub fn alpha_beta(gamma: f64, k: DriftMomentum, ip: f64) -> AlphaBeta {
    let g = saddle_geometry(gamma, k, ip);
    AlphaBeta { alpha: g.alpha, beta: g.beta }
}

/// The same pair evaluated from the explicit closed form in which the
/// Keldysh parameter multiplies the square roots:
///
/// ```text
/// alpha, beta = (gamma/2) [ sqrt(k^2/2Ip + (2/gamma) k_par/sqrt(2Ip) + 1/gamma^2 + 1)
///                        +- sqrt(k^2/2Ip - (2/gamma) k_par/sqrt(2Ip) + 1/gamma^2 + 1) ].
/// ```
///
/// Algebraically identical to [`alpha_beta`]; kept as the independent route
/// for consistency checks.
pub fn alpha_beta_general_block(gamma: f64, k: DriftMomentum, ip: f64) -> AlphaBeta {
    let sqrt_2ip = (2.0 * ip).sqrt();
    let k2_red = k.k_squared() / (2.0 * ip);
    let cross = (2.0 / gamma) * (k.k_par / sqrt_2ip);
    let base = 1.0 / (gamma * gamma) + 1.0;
    let big1 = (k2_red + cross + base).sqrt();
    let big2 = (k2_red - cross + base).sqrt();
    AlphaBeta {
        alpha: 0.5 * gamma * (big1 + big2),
        beta: 0.5 * gamma * (big1 - big2),
    }
}

/// arccosh with the defensive guard for rounding: alpha in [1 - 1e-12, 1)
/// is clamped to 1; anything smaller is a broken invariant.
pub(crate) fn arccosh_guarded(alpha: f64) -> Result<f64> {
    if alpha >= 1.0 {
        Ok(alpha.acosh())
    } else if alpha >= 1.0 - 1e-12 {
        Ok(0.0)
    } else {
        Err(Error::Internal(format!("alpha = {alpha} < 1 - 1e-12")))
    }
}

/// The dimensionless exponent
///
/// ```text
/// f = (1 + 1/(2 gamma^2) + k^2/(2 I_p)) arccosh(alpha)
///     - sqrt(alpha^2 - 1) [ (beta/gamma) sqrt(2/I_p) k_par
///                           + alpha (1 - 2 beta^2) / (2 gamma^2) ],
/// ```
///
/// valid for arbitrary momentum and Keldysh parameter. Even in `k_par` and
/// in `k_perp`; at `k = 0` it reduces to the Keldysh exponent bit for bit.
pub fn suppression_exponent(gamma: f64, k: DriftMomentum, ip: f64) -> f64 {
    let g = saddle_geometry(gamma, k, ip);
    let s = g.sinh_im;
    // arccosh(alpha) evaluated as asinh(sinh_im): same stable path as s.
    let arccosh_alpha = s.asinh();
    let k2_red = k.k_squared() / (2.0 * ip);
    let coeff = (1.0 + 1.0 / (2.0 * gamma * gamma)) + k2_red;
    // (beta/gamma) sqrt(2/Ip) k_par = 2 beta kappa_par / gamma; the second
    // summand is factored through s/gamma so that k = 0 collapses to the
    // Keldysh form exactly.
    let kappa_par = k.k_par / (2.0 * ip).sqrt();
    let drift_term = s * (2.0 * g.beta * kappa_par / gamma);
    let field_term = ((s / gamma) * g.alpha * (1.0 - 2.0 * g.beta * g.beta)) / (2.0 * gamma);
    coeff * arccosh_alpha - (drift_term + field_term)
}

/// ln Gamma(gamma, k_par, k_perp) up to an additive constant:
/// `-(2 I_p / omega) f`. Never exponentiated internally; the rate itself
/// underflows an f64 already at moderate momenta.
pub fn log_rate(field: &LaserField, target: &Target, k: DriftMomentum) -> f64 {
    let gamma = field.keldysh_gamma(target);
    to_log_rate(field.omega(), target.ip(), suppression_exponent(gamma, k, target.ip()))
}

#[inline]
pub(crate) fn to_log_rate(omega: f64, ip: f64, f: f64) -> f64 {
    -(2.0 * ip / omega) * f
}

/// Full evaluation record for one momentum.
pub fn evaluate(field: &LaserField, target: &Target, k: DriftMomentum) -> RateEval {
    let gamma = field.keldysh_gamma(target);
    let ab = alpha_beta(gamma, k, target.ip());
    let f = suppression_exponent(gamma, k, target.ip());
    RateEval {
        f,
        log_rate: to_log_rate(field.omega(), target.ip(), f),
        alpha: ab.alpha,
        beta: ab.beta,
    }
}

/// The transition phase `omega t0 = Arcsin(x + i y)` on the principal branch
/// (K = 0), which is the root in the upper half-plane closest to the real
/// axis with `Re(omega t0)` in [-pi/2, pi/2].
pub fn transition_point(gamma: f64, k: DriftMomentum, ip: f64) -> TransitionPoint {
    let g = saddle_geometry(gamma, k, ip);
    TransitionPoint {
        re_phase: g.beta.asin(),
        im_phase: g.sinh_im.asinh(),
    }
}

/// ln Gamma at laser phase `phi = omega t`: the drift momentum along the
/// polarization is shifted by minus the vector potential,
/// `k_par -> k_par - A(t) = k_par + (F/omega) sin(phi)`.
pub fn phase_log_rate(field: &LaserField, target: &Target, k: DriftMomentum, phi: f64) -> f64 {
    let shifted = k.k_par + field.vector_potential_amplitude() * phi.sin();
    log_rate(field, target, DriftMomentum::new(shifted, k.k_perp))
}
