//! Known special-case and asymptotic rate formulas, plus a harness that
//! quantifies how well each one tracks the general exponent inside its
//! validity regime.
//!
//! All comparisons are done on log-rates. Prefactors are undefined at
//! exponential accuracy, so linear-rate comparisons would be meaningless.

use crate::error::{Error, Result};
use crate::rate::{log_rate, to_log_rate, DriftMomentum};
use crate::units::{LaserField, Target};

/// The special-case formulas recovered from the general exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// k = 0: the original Keldysh exponent.
    Keldysh,
    /// Tunneling, k_perp = 0: Gaussian suppression of the parallel drift.
    CorkumParallel,
    /// Tunneling, k_par = 0: full transverse exponent 2 (k^2 + 2Ip)^(3/2) / 3F.
    DelonePerp,
    /// Tunneling, k_par = 0, small k_perp: Gaussian transverse profile.
    IvanovPerpSmall,
    /// Tunneling, high kinetic energy along the polarization.
    KrainovHighEnergy,
    /// k_par^2/2 >> 2 Up, any gamma: power-law-in-exponent asymptote.
    KrainovAsymptotic,
    /// k_perp^2/2 >> 2 Up, any gamma: transverse analogue.
    PerpAsymptotic,
    /// I_p >> k^2/2: quadratic expansion around k = 0.
    PptExpansion,
}

impl LimitKind {
    pub const ALL: [LimitKind; 8] = [
        LimitKind::Keldysh,
        LimitKind::CorkumParallel,
        LimitKind::DelonePerp,
        LimitKind::IvanovPerpSmall,
        LimitKind::KrainovHighEnergy,
        LimitKind::KrainovAsymptotic,
        LimitKind::PerpAsymptotic,
        LimitKind::PptExpansion,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LimitKind::Keldysh => "keldysh",
            LimitKind::CorkumParallel => "corkum_parallel",
            LimitKind::DelonePerp => "delone_perp",
            LimitKind::IvanovPerpSmall => "ivanov_perp_small",
            LimitKind::KrainovHighEnergy => "krainov_high_energy",
            LimitKind::KrainovAsymptotic => "krainov_asymptotic",
            LimitKind::PerpAsymptotic => "perp_asymptotic",
            LimitKind::PptExpansion => "ppt_expansion",
        }
    }
}

/// Validity-regime thresholds. The source formulas only state "much
/// smaller/larger"; these concrete cutoffs are calibration choices and are
/// carried as configuration so reports can flag rather than assert.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeThresholds {
    /// gamma at or below this counts as tunneling.
    pub tunneling_gamma_max: f64,
    /// k^2 / (2 I_p) at or below this counts as a small momentum for the
    /// quadratic expansion.
    pub ppt_k2_over_2ip_max: f64,
    /// k^2/2 at or above this multiple of U_p counts as asymptotic.
    pub asymptotic_energy_up_min: f64,
    /// sqrt(k_par^2 / 4 Up) - 1 must exceed this multiple of gamma for the
    /// high-energy tunneling formula.
    pub krainov_margin_gammas: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self {
            tunneling_gamma_max: 0.3,
            ppt_k2_over_2ip_max: 0.05,
            asymptotic_energy_up_min: 10.0,
            krainov_margin_gammas: 5.0,
        }
    }
}

/// Agreement report between the general exponent and one limit formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitReport {
    pub limit: LimitKind,
    pub general_log_rate: f64,
    pub limit_log_rate: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub in_validity_regime: bool,
}

/// Floor that keeps the relative difference defined at a vanishing
/// general log-rate.
const REL_DIFF_FLOOR: f64 = 1e-300;

/// The Keldysh exponent f(gamma, 0, 0) =
/// (1 + 1/(2 gamma^2)) arcsinh(gamma) - sqrt(1 + gamma^2) / (2 gamma).
pub fn keldysh_exponent(gamma: f64) -> f64 {
    (1.0 + 1.0 / (2.0 * gamma * gamma)) * gamma.asinh()
        - (1.0 + gamma * gamma).sqrt() / (2.0 * gamma)
}

fn zero_momentum_log_rate(field: &LaserField, target: &Target) -> f64 {
    to_log_rate(
        field.omega(),
        target.ip(),
        keldysh_exponent(field.keldysh_gamma(target)),
    )
}

/// Tunneling-regime parallel spread:
/// `ln Gamma = ln Gamma(gamma,0,0) - k_par^2 gamma^3 / (3 omega)`.
pub fn corkum_parallel_log_rate(field: &LaserField, target: &Target, k_par: f64) -> f64 {
    let gamma = field.keldysh_gamma(target);
    zero_momentum_log_rate(field, target)
        - k_par * k_par * gamma * gamma * gamma / (3.0 * field.omega())
}

/// Tunneling-regime transverse exponent:
/// `ln Gamma = -2 (k_perp^2 + 2 I_p)^(3/2) / (3 F)` (absolute, not relative
/// to the k = 0 rate).
pub fn delone_perp_log_rate(field: &LaserField, target: &Target, k_perp: f64) -> f64 {
    -2.0 * (k_perp * k_perp + 2.0 * target.ip()).powf(1.5) / (3.0 * field.f0())
}

/// Small-k_perp Gaussian form of the transverse exponent:
/// `ln Gamma = ln Gamma(gamma,0,0) - sqrt(2 I_p) k_perp^2 / F`.
pub fn ivanov_perp_log_rate(field: &LaserField, target: &Target, k_perp: f64) -> f64 {
    zero_momentum_log_rate(field, target)
        - (2.0 * target.ip()).sqrt() * k_perp * k_perp / field.f0()
}

/// Gaussian width of the transverse profile, sqrt(F / (2 sqrt(2 I_p))):
/// the exponent above equals -1/2 at one width and -1 at sqrt(2) widths.
pub fn ivanov_transverse_width(field: &LaserField, target: &Target) -> f64 {
    (field.f0() / (2.0 * (2.0 * target.ip()).sqrt())).sqrt()
}

/// High kinetic energy along the polarization in the tunneling regime:
///
/// ```text
/// ln Gamma = -(2 Up / omega) [ (k_par^2/(2 Up) + 1) arccosh sqrt(k_par^2/(4 Up))
///                              - 3 sqrt( (k_par^2/(4 Up)) (k_par^2/(4 Up) - 1) ) ]
/// ```
///
/// Undefined for k_par^2 < 4 Up where the arccosh argument drops below one.
pub fn krainov_high_energy_log_rate(field: &LaserField, k_par: f64) -> Result<f64> {
    let up = field.up();
    let a = k_par * k_par / (4.0 * up);
    if a < 1.0 {
        return Err(Error::LimitUndefined {
            limit: LimitKind::KrainovHighEnergy,
            reason: format!("k_par^2 = {:.6e} is below 4 Up = {:.6e}", k_par * k_par, 4.0 * up),
        });
    }
    let bracket = (k_par * k_par / (2.0 * up) + 1.0) * a.sqrt().acosh() - 3.0 * (a * (a - 1.0)).sqrt();
    Ok(-(2.0 * up / field.omega()) * bracket)
}

/// Large parallel momentum, arbitrary gamma:
/// `ln Gamma = (k_par^2 / (2 omega)) [ ln(F^2 / (4 omega^2 k_par^2)) + 3 ]`.
pub fn krainov_asymptotic_log_rate(field: &LaserField, k_par: f64) -> Result<f64> {
    large_momentum_log_rate(field, k_par, 3.0, LimitKind::KrainovAsymptotic)
}

/// Large transverse momentum, arbitrary gamma:
/// `ln Gamma = (k_perp^2 / (2 omega)) [ ln(F^2 / (4 omega^2 k_perp^2)) + 1 ]`.
pub fn perp_asymptotic_log_rate(field: &LaserField, k_perp: f64) -> Result<f64> {
    large_momentum_log_rate(field, k_perp, 1.0, LimitKind::PerpAsymptotic)
}

fn large_momentum_log_rate(
    field: &LaserField,
    k: f64,
    constant: f64,
    limit: LimitKind,
) -> Result<f64> {
    if k == 0.0 {
        return Err(Error::LimitUndefined {
            limit,
            reason: "undefined at zero momentum".to_string(),
        });
    }
    let omega = field.omega();
    let ratio = (field.f0() * field.f0()) / (4.0 * omega * omega * k * k);
    Ok((k * k / (2.0 * omega)) * (ratio.ln() + constant))
}

/// Quadratic expansion of the exponent for I_p >> k^2/2:
///
/// ```text
/// f ~= f(gamma,0,0) + (k^2 / 2 I_p) arcsinh(gamma)
///      - (gamma / sqrt(1 + gamma^2)) k_par^2 / (2 I_p).
/// ```
pub fn ppt_expansion_exponent(gamma: f64, k: DriftMomentum, ip: f64) -> f64 {
    keldysh_exponent(gamma) + (k.k_squared() / (2.0 * ip)) * gamma.asinh()
        - (gamma / (1.0 + gamma * gamma).sqrt()) * (k.k_par() * k.k_par() / (2.0 * ip))
}

fn require(cond: bool, limit: LimitKind, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::LimitUndefined { limit, reason: reason.to_string() })
    }
}

/// Evaluate one limit against the general exponent at the same momentum.
///
/// Out-of-regime inputs are flagged, never rejected; only momenta at which
/// the limit formula is structurally undefined produce an error.
pub fn compare_limit(
    limit: LimitKind,
    field: &LaserField,
    target: &Target,
    k: DriftMomentum,
    thresholds: &RegimeThresholds,
) -> Result<LimitReport> {
    let gamma = field.keldysh_gamma(target);
    let up = field.up();
    let energy = 0.5 * k.k_squared();
    let tunneling = gamma <= thresholds.tunneling_gamma_max;

    let (limit_log_rate, in_validity_regime) = match limit {
        LimitKind::Keldysh => {
            require(k.k_squared() == 0.0, limit, "defined only at k = 0")?;
            (zero_momentum_log_rate(field, target), true)
        }
        LimitKind::CorkumParallel => {
            require(k.k_perp() == 0.0, limit, "requires k_perp = 0")?;
            (corkum_parallel_log_rate(field, target, k.k_par()), tunneling)
        }
        LimitKind::DelonePerp => {
            require(k.k_par() == 0.0, limit, "requires k_par = 0")?;
            (delone_perp_log_rate(field, target, k.k_perp()), tunneling)
        }
        LimitKind::IvanovPerpSmall => {
            require(k.k_par() == 0.0, limit, "requires k_par = 0")?;
            (ivanov_perp_log_rate(field, target, k.k_perp()), tunneling)
        }
        LimitKind::KrainovHighEnergy => {
            require(k.k_perp() == 0.0, limit, "requires k_perp = 0")?;
            let value = krainov_high_energy_log_rate(field, k.k_par())?;
            let margin = (k.k_par() * k.k_par() / (4.0 * up)).sqrt() - 1.0;
            (value, tunneling && margin >= thresholds.krainov_margin_gammas * gamma)
        }
        LimitKind::KrainovAsymptotic => {
            require(k.k_perp() == 0.0, limit, "requires k_perp = 0")?;
            let value = krainov_asymptotic_log_rate(field, k.k_par())?;
            (value, energy >= thresholds.asymptotic_energy_up_min * up)
        }
        LimitKind::PerpAsymptotic => {
            require(k.k_par() == 0.0, limit, "requires k_par = 0")?;
            let value = perp_asymptotic_log_rate(field, k.k_perp())?;
            (value, energy >= thresholds.asymptotic_energy_up_min * up)
        }
        LimitKind::PptExpansion => {
            let f = ppt_expansion_exponent(gamma, k, target.ip());
            let small = k.k_squared() / (2.0 * target.ip()) <= thresholds.ppt_k2_over_2ip_max;
            (to_log_rate(field.omega(), target.ip(), f), small)
        }
    };

    let general_log_rate = log_rate(field, target, k);
    let abs_diff = (general_log_rate - limit_log_rate).abs();
    Ok(LimitReport {
        limit,
        general_log_rate,
        limit_log_rate,
        abs_diff,
        rel_diff: abs_diff / general_log_rate.abs().max(REL_DIFF_FLOOR),
        in_validity_regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{field_from_intensity, omega_from_wavelength};
    use approx::assert_relative_eq;

    fn hydrogen(intensity: f64) -> (LaserField, Target) {
        let omega = omega_from_wavelength(800.0).unwrap();
        let f0 = field_from_intensity(intensity).unwrap();
        (LaserField::new(omega, f0).unwrap(), Target::hydrogen())
    }

    #[test]
    fn keldysh_exponent_values() {
        assert_relative_eq!(keldysh_exponent(3.376), 1.4943276634268174, max_relative = 1e-15);
        assert_relative_eq!(keldysh_exponent(0.4357), 0.2852622931119062, max_relative = 1e-15);
        // gamma -> 0 slope 2/3
        assert_relative_eq!(keldysh_exponent(1e-4), 2.0 * 1e-4 / 3.0, max_relative = 1e-7);
    }

    #[test]
    fn keldysh_matches_general_exponent_bitwise() {
        for gamma in [0.01, 0.4357, 1.0, 3.376, 100.0] {
            let f = crate::rate::suppression_exponent(gamma, DriftMomentum::zero(), 0.5);
            assert_eq!(f.to_bits(), keldysh_exponent(gamma).to_bits());
        }
    }

    #[test]
    fn corkum_reduces_to_keldysh_at_zero() {
        let (field, t) = hydrogen(6e14);
        let base = zero_momentum_log_rate(&field, &t);
        assert_eq!(corkum_parallel_log_rate(&field, &t, 0.0).to_bits(), base.to_bits());
    }

    #[test]
    fn corkum_correction_quadratic() {
        let (field, t) = hydrogen(6e14);
        let base = zero_momentum_log_rate(&field, &t);
        let c1 = base - corkum_parallel_log_rate(&field, &t, 0.1);
        let c2 = base - corkum_parallel_log_rate(&field, &t, 0.2);
        assert_relative_eq!(c2, 4.0 * c1, max_relative = 1e-12);
    }

    #[test]
    fn corkum_tracks_general_in_regime() {
        let (field, t) = hydrogen(6e14);
        for k_par in [0.02, 0.05, 0.1] {
            let rep = compare_limit(
                LimitKind::CorkumParallel,
                &field,
                &t,
                DriftMomentum::new(k_par, 0.0),
                &RegimeThresholds::default(),
            )
            .unwrap();
            assert!(rep.rel_diff < 2e-2, "rel_diff = {}", rep.rel_diff);
        }
    }

    #[test]
    fn delone_static_exponent_at_zero() {
        let (field, t) = hydrogen(6e14);
        let expected = -2.0 * (2.0 * t.ip()).powf(1.5) / (3.0 * field.f0());
        assert_eq!(delone_perp_log_rate(&field, &t, 0.0).to_bits(), expected.to_bits());
    }

    #[test]
    fn delone_agrees_with_general() {
        let (field, t) = hydrogen(6e14);
        let rep = compare_limit(
            LimitKind::DelonePerp,
            &field,
            &t,
            DriftMomentum::new(0.0, 0.2),
            &RegimeThresholds::default(),
        )
        .unwrap();
        assert!(rep.rel_diff < 3e-2, "rel_diff = {}", rep.rel_diff);
    }

    #[test]
    fn ivanov_matches_delone_to_second_order() {
        let (field, t) = hydrogen(6e14);
        // both minus the k=0 value: difference is O(k_perp^4)
        let d0 = delone_perp_log_rate(&field, &t, 0.0);
        for k in [0.02, 0.04] {
            let dd = delone_perp_log_rate(&field, &t, k) - d0;
            let di = ivanov_perp_log_rate(&field, &t, k) - zero_momentum_log_rate(&field, &t);
            let quartic = (2.0 * t.ip()).sqrt() * k.powi(4) / (4.0 * field.f0() * 2.0 * t.ip());
            assert!((dd - di).abs() <= 2.0 * quartic, "k={k}: {} vs {}", dd, di);
        }
    }

    #[test]
    fn ivanov_width_efolding() {
        let (field, t) = hydrogen(6e14);
        let w = ivanov_transverse_width(&field, &t);
        assert_relative_eq!(w, 0.2556896818467426, max_relative = 1e-14);
        let base = zero_momentum_log_rate(&field, &t);
        assert_relative_eq!(ivanov_perp_log_rate(&field, &t, w) - base, -0.5, max_relative = 1e-13);
        let k_1e = std::f64::consts::SQRT_2 * w;
        assert_relative_eq!(ivanov_perp_log_rate(&field, &t, k_1e) - base, -1.0, max_relative = 1e-13);
    }

    #[test]
    fn krainov_high_energy_threshold() {
        let (field, t) = hydrogen(6e14);
        let edge = 2.0 * field.up().sqrt();
        // exactly at k_par^2 = 4 Up the bracket vanishes
        let at_edge = krainov_high_energy_log_rate(&field, edge).unwrap();
        assert!(at_edge.abs() < 1e-10, "bracket should vanish, got {at_edge}");
        assert!(krainov_high_energy_log_rate(&field, 0.9 * edge).is_err());
        // at the threshold the margin condition cannot hold: flagged
        let rep = compare_limit(
            LimitKind::KrainovHighEnergy,
            &field,
            &t,
            DriftMomentum::new(edge, 0.0),
            &RegimeThresholds::default(),
        )
        .unwrap();
        assert!(!rep.in_validity_regime);
    }

    #[test]
    fn alpha_beta_small_momentum_approximations() {
        // the expansion regime replaces alpha, beta by
        // sqrt(1 + gamma^2) and gamma k_par / (sqrt(1+gamma^2) sqrt(2 Ip))
        let gamma = 1.3;
        let ip = 0.5;
        let k = DriftMomentum::new(0.02, 0.015);
        let ab = crate::rate::alpha_beta(gamma, k, ip);
        let alpha0 = (1.0 + gamma * gamma).sqrt();
        let beta0 = gamma * k.k_par() / (alpha0 * (2.0 * ip).sqrt());
        assert_relative_eq!(ab.alpha, alpha0, max_relative = 1e-3);
        assert_relative_eq!(ab.beta, beta0, max_relative = 1e-3);
    }

    #[test]
    fn krainov_high_energy_converges() {
        let (field, t) = hydrogen(6e14);
        let edge = 2.0 * field.up().sqrt();
        let mut prev = f64::INFINITY;
        for mult in [2.0, 3.0, 4.0, 6.0] {
            let k = DriftMomentum::new(mult * edge, 0.0);
            let rep = compare_limit(
                LimitKind::KrainovHighEnergy,
                &field,
                &t,
                k,
                &RegimeThresholds::default(),
            )
            .unwrap();
            assert!(rep.rel_diff < prev, "not shrinking at {mult}: {}", rep.rel_diff);
            prev = rep.rel_diff;
        }
    }

    #[test]
    fn asymptotic_closed_forms() {
        let (field, _) = hydrogen(6e14);
        let omega = field.omega();
        let f0 = field.f0();
        for k in [2.0, 5.0] {
            let expect3 = (k * k / (2.0 * omega)) * (3.0 + (f0 * f0).ln() - (4.0 * omega * omega * k * k).ln());
            assert_relative_eq!(
                krainov_asymptotic_log_rate(&field, k).unwrap(),
                expect3,
                max_relative = 1e-12
            );
            let expect1 = (k * k / (2.0 * omega)) * (1.0 + (f0 * f0).ln() - (4.0 * omega * omega * k * k).ln());
            assert_relative_eq!(
                perp_asymptotic_log_rate(&field, k).unwrap(),
                expect1,
                max_relative = 1e-12
            );
        }
        assert!(krainov_asymptotic_log_rate(&field, 0.0).is_err());
        assert!(perp_asymptotic_log_rate(&field, 0.0).is_err());
    }

    #[test]
    fn asymptotics_converge_at_both_gammas() {
        for intensity in [1e13, 6e14] {
            let (field, t) = hydrogen(intensity);
            let up = field.up();
            for (kind, perp) in [(LimitKind::KrainovAsymptotic, false), (LimitKind::PerpAsymptotic, true)] {
                let mut prev = f64::INFINITY;
                for m in [10.0, 20.0, 40.0, 80.0] {
                    let kmag = (2.0 * m * up).sqrt();
                    let k = if perp {
                        DriftMomentum::new(0.0, kmag)
                    } else {
                        DriftMomentum::new(kmag, 0.0)
                    };
                    let rep = compare_limit(kind, &field, &t, k, &RegimeThresholds::default()).unwrap();
                    assert!(
                        rep.rel_diff < prev,
                        "{:?} at I={intensity}, m={m}: {} !< {prev}",
                        kind,
                        rep.rel_diff
                    );
                    assert!(rep.in_validity_regime);
                    prev = rep.rel_diff;
                }
            }
        }
    }

    #[test]
    fn ppt_exact_at_zero() {
        for gamma in [0.4357, 3.376] {
            assert_eq!(
                ppt_expansion_exponent(gamma, DriftMomentum::zero(), 0.5).to_bits(),
                keldysh_exponent(gamma).to_bits()
            );
        }
    }

    #[test]
    fn ppt_quadratic_structure() {
        // the correction is an exact quadratic form in (k_par, k_perp)
        let gamma = 1.7;
        let ip = 0.5;
        let q = |k: DriftMomentum| ppt_expansion_exponent(gamma, k, ip) - keldysh_exponent(gamma);
        let a_par = q(DriftMomentum::new(1.0, 0.0));
        let a_perp = q(DriftMomentum::new(0.0, 1.0));
        for (kp, kq) in [(0.3, 0.4), (0.11, 0.07), (1.3, 0.9)] {
            let expect = a_par * kp * kp + a_perp * kq * kq;
            assert_relative_eq!(q(DriftMomentum::new(kp, kq)), expect, max_relative = 1e-10);
        }
        // coefficients match the closed form
        assert_relative_eq!(
            a_par,
            (gamma.asinh() - gamma / (1.0 + gamma * gamma).sqrt()) / (2.0 * ip),
            max_relative = 1e-12
        );
        assert_relative_eq!(a_perp, gamma.asinh() / (2.0 * ip), max_relative = 1e-12);
    }

    #[test]
    fn ppt_tracks_general_at_small_k() {
        for intensity in [1e13, 6e14] {
            let (field, t) = hydrogen(intensity);
            let k2 = 0.01 * 2.0 * t.ip();
            let k = k2.sqrt();
            for (kp, kq) in [(k, 0.0), (0.0, k), (k / 2f64.sqrt(), k / 2f64.sqrt())] {
                let rep = compare_limit(
                    LimitKind::PptExpansion,
                    &field,
                    &t,
                    DriftMomentum::new(kp, kq),
                    &RegimeThresholds::default(),
                )
                .unwrap();
                assert!(rep.rel_diff < 1e-2, "I={intensity}: rel {}", rep.rel_diff);
                assert!(rep.in_validity_regime);
            }
        }
    }

    #[test]
    fn compare_limit_keldysh_exact() {
        let (field, t) = hydrogen(1e13);
        let rep = compare_limit(
            LimitKind::Keldysh,
            &field,
            &t,
            DriftMomentum::zero(),
            &RegimeThresholds::default(),
        )
        .unwrap();
        assert!(rep.rel_diff < 1e-12);
        assert!(rep.in_validity_regime);
    }

    #[test]
    fn compare_limit_rejects_undefined() {
        let (field, t) = hydrogen(6e14);
        let th = RegimeThresholds::default();
        let off_axis = DriftMomentum::new(0.1, 0.1);
        assert!(compare_limit(LimitKind::CorkumParallel, &field, &t, off_axis, &th).is_err());
        assert!(compare_limit(LimitKind::DelonePerp, &field, &t, off_axis, &th).is_err());
        let below = DriftMomentum::new(0.5 * field.up().sqrt(), 0.0);
        assert!(compare_limit(LimitKind::KrainovHighEnergy, &field, &t, below, &th).is_err());
    }

    #[test]
    fn out_of_regime_flagged_not_rejected() {
        // multiphoton gamma with a tunneling-only formula: flagged
        let (field, t) = hydrogen(1e13);
        let rep = compare_limit(
            LimitKind::CorkumParallel,
            &field,
            &t,
            DriftMomentum::new(0.05, 0.0),
            &RegimeThresholds::default(),
        )
        .unwrap();
        assert!(!rep.in_validity_regime);
    }
}
