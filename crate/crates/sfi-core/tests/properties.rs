//! Property tests of the saddle algebra and exponent invariants.

use proptest::prelude::*;
use sfi_core::limits::keldysh_exponent;
use sfi_core::oracle::saddle_residual;
use sfi_core::rate::{
    alpha_beta, alpha_beta_general_block, suppression_exponent, transition_point, DriftMomentum,
};
use sfi_core::units::{LaserField, Target};

fn scaled_momenta() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    // (gamma, ip, kappa_par, kappa_perp) with momenta in units of sqrt(2 Ip)
    (0.05f64..20.0, 0.1f64..2.0, -3.0f64..3.0, 0.0f64..3.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn alpha_beta_identities((gamma, ip, kappa_par, kappa_perp) in scaled_momenta()) {
        let scale = (2.0 * ip).sqrt();
        let k = DriftMomentum::new(kappa_par * scale, kappa_perp * scale);
        let ab = alpha_beta(gamma, k, ip);
        let x = gamma * k.k_par() / scale;
        let y = gamma * (1.0 + k.k_perp() * k.k_perp() / (2.0 * ip)).sqrt();

        prop_assert!(ab.alpha > 1.0);
        prop_assert!(ab.beta.abs() <= 1.0);

        // alpha * beta = x
        let prod = ab.alpha * ab.beta;
        prop_assert!((prod - x).abs() <= 1e-10 * x.abs().max(1e-300),
            "alpha*beta = {prod}, x = {x}");

        // alpha^2 + beta^2 = 1 + x^2 + y^2
        let lhs = ab.alpha * ab.alpha + ab.beta * ab.beta;
        let rhs = 1.0 + x * x + y * y;
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs, "{lhs} vs {rhs}");
    }

    #[test]
    fn alpha_beta_routes_agree((gamma, ip, kappa_par, kappa_perp) in scaled_momenta()) {
        let scale = (2.0 * ip).sqrt();
        let k = DriftMomentum::new(kappa_par * scale, kappa_perp * scale);
        let a = alpha_beta(gamma, k, ip);
        let b = alpha_beta_general_block(gamma, k, ip);
        prop_assert!((a.alpha - b.alpha).abs() <= 1e-12 * a.alpha);
        // beta is bounded by 1, so the branch agreement is absolute
        prop_assert!((a.beta - b.beta).abs() <= 1e-12);
    }

    #[test]
    fn exponent_parity_and_sign((gamma, ip, kappa_par, kappa_perp) in scaled_momenta()) {
        let scale = (2.0 * ip).sqrt();
        let kp = kappa_par * scale;
        let kq = kappa_perp * scale;
        let f = suppression_exponent(gamma, DriftMomentum::new(kp, kq), ip);
        prop_assert!(f >= 0.0);
        prop_assert!(f.is_finite());
        let f_mirror_par = suppression_exponent(gamma, DriftMomentum::new(-kp, kq), ip);
        prop_assert_eq!(f.to_bits(), f_mirror_par.to_bits());
        let f_mirror_perp = suppression_exponent(gamma, DriftMomentum::new(kp, -kq), ip);
        prop_assert_eq!(f.to_bits(), f_mirror_perp.to_bits());
    }

    #[test]
    fn exponent_monotone_along_axes((gamma, ip) in (0.05f64..20.0, 0.1f64..2.0), step in 0.01f64..1.0) {
        let scale = (2.0 * ip).sqrt();
        let f0 = suppression_exponent(gamma, DriftMomentum::zero(), ip);
        let f1 = suppression_exponent(gamma, DriftMomentum::new(step * scale, 0.0), ip);
        let f2 = suppression_exponent(gamma, DriftMomentum::new(2.0 * step * scale, 0.0), ip);
        prop_assert!(f0 < f1 && f1 < f2);
        let g1 = suppression_exponent(gamma, DriftMomentum::new(0.0, step * scale), ip);
        let g2 = suppression_exponent(gamma, DriftMomentum::new(0.0, 2.0 * step * scale), ip);
        prop_assert!(f0 < g1 && g1 < g2);
    }

    #[test]
    fn keldysh_reduction_over_gamma(log_gamma in -2.0f64..2.0) {
        let gamma = 10f64.powf(log_gamma);
        let f = suppression_exponent(gamma, DriftMomentum::zero(), 0.5);
        let closed = keldysh_exponent(gamma);
        prop_assert!((f - closed).abs() <= 1e-12 * closed.abs());
    }

    #[test]
    fn transition_point_upper_half_principal((gamma, ip, kappa_par, kappa_perp) in scaled_momenta()) {
        let scale = (2.0 * ip).sqrt();
        let k = DriftMomentum::new(kappa_par * scale, kappa_perp * scale);
        let tp = transition_point(gamma, k, ip);
        prop_assert!(tp.im_phase > 0.0);
        prop_assert!(tp.re_phase.abs() <= std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn energy_conserved_at_transition_point((gamma, ip, kappa_par, kappa_perp) in scaled_momenta()) {
        let scale = (2.0 * ip).sqrt();
        let k = DriftMomentum::new(kappa_par * scale, kappa_perp * scale);
        let target = Target::new(ip).unwrap();
        // any omega realizes the same gamma through the matching field
        let omega = 0.05696;
        let field = LaserField::new(omega, omega * scale / gamma).unwrap();
        let tp = transition_point(gamma, k, ip);
        prop_assert!(saddle_residual(&field, &target, k, &tp) < 1e-10);
    }
}
