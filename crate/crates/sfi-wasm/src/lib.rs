//! Browser bindings for the interactive demo page: momentum spectra,
//! phase-dependence curves and the normalized parallel cut with its
//! detected knee, all computed client-side.

use wasm_bindgen::prelude::*;

use sfi_core::rate::{log_rate, phase_log_rate, DriftMomentum};
use sfi_core::scan::{find_cutoff, spectrum_grid, CutoffConfig, GridSpec};
use sfi_core::units::{LabLaser, LaserField, Target};

fn setup(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
) -> Result<(LaserField, Target), sfi_core::Error> {
    let field = LaserField::from_lab(&LabLaser::new(wavelength_nm, intensity)?)?;
    Ok((field, Target::new(ip_au)?))
}

fn js_err(e: sfi_core::Error) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Derived field parameters as a JSON string.
#[wasm_bindgen]
pub fn field_info(wavelength_nm: f64, intensity: f64, ip_au: f64) -> Result<String, JsValue> {
    field_info_impl(wavelength_nm, intensity, ip_au).map_err(js_err)
}

fn field_info_impl(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
) -> Result<String, sfi_core::Error> {
    let (field, target) = setup(wavelength_nm, intensity, ip_au)?;
    Ok(format!(
        concat!(
            "{{\"omega_au\":{},\"f0_au\":{},\"gamma\":{},\"up_au\":{},",
            "\"two_up_au\":{},\"log_rate_origin\":{},\"k_scale\":{}}}"
        ),
        field.omega(),
        field.f0(),
        field.keldysh_gamma(&target),
        field.up(),
        2.0 * field.up(),
        log_rate(&field, &target, DriftMomentum::zero()),
        (2.0 * target.ip()).sqrt(),
    ))
}

/// Normalized ln Gamma over a (k_par, k_perp) grid, row-major with k_par as
/// the outer index: n_par * n_perp values, peak at 0.
///
/// The window is [-k_max, k_max] x [0, k_max] with
/// k_max = k_max_scale * sqrt(2 I_p).
#[wasm_bindgen]
pub fn spectrum(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    n_par: usize,
    n_perp: usize,
    k_max_scale: f64,
) -> Result<Vec<f64>, JsValue> {
    spectrum_impl(wavelength_nm, intensity, ip_au, n_par, n_perp, k_max_scale).map_err(js_err)
}

fn spectrum_impl(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    n_par: usize,
    n_perp: usize,
    k_max_scale: f64,
) -> Result<Vec<f64>, sfi_core::Error> {
    let (field, target) = setup(wavelength_nm, intensity, ip_au)?;
    let k_max = k_max_scale * (2.0 * target.ip()).sqrt();
    let spec = GridSpec {
        k_par_min: -k_max,
        k_par_max: k_max,
        k_perp_min: 0.0,
        k_perp_max: k_max,
        n_par,
        n_perp,
        normalize: true,
    };
    let result = spectrum_grid(&field, &target, &spec)?;
    Ok(result.rows.iter().map(|r| r[2]).collect())
}

/// ln Gamma(gamma, k + (F/omega) sin phi, 0) over n_phi phases spanning
/// [-pi/2, pi/2], normalized to the k = 0, phi = 0 peak.
#[wasm_bindgen]
pub fn phase_curve(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    k_offset: f64,
    n_phi: usize,
) -> Result<Vec<f64>, JsValue> {
    phase_curve_impl(wavelength_nm, intensity, ip_au, k_offset, n_phi).map_err(js_err)
}

fn phase_curve_impl(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    k_offset: f64,
    n_phi: usize,
) -> Result<Vec<f64>, sfi_core::Error> {
    let (field, target) = setup(wavelength_nm, intensity, ip_au)?;
    let base = log_rate(&field, &target, DriftMomentum::zero());
    let k = DriftMomentum::new(k_offset, 0.0);
    let half = std::f64::consts::FRAC_PI_2;
    Ok((0..n_phi)
        .map(|i| {
            let phi = -half + 2.0 * half * i as f64 / (n_phi - 1) as f64;
            phase_log_rate(&field, &target, k, phi) - base
        })
        .collect())
}

/// Interleaved (E / U_p, ln[Gamma(k_par,0)/Gamma(0,0)]) pairs on a linear
/// kinetic-energy grid up to e_max_up * U_p.
#[wasm_bindgen]
pub fn parallel_cut(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    n: usize,
    e_max_up: f64,
) -> Result<Vec<f64>, JsValue> {
    parallel_cut_impl(wavelength_nm, intensity, ip_au, n, e_max_up).map_err(js_err)
}

fn parallel_cut_impl(
    wavelength_nm: f64,
    intensity: f64,
    ip_au: f64,
    n: usize,
    e_max_up: f64,
) -> Result<Vec<f64>, sfi_core::Error> {
    let (field, target) = setup(wavelength_nm, intensity, ip_au)?;
    let base = log_rate(&field, &target, DriftMomentum::zero());
    let up = field.up();
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let e = e_max_up * up * i as f64 / (n - 1) as f64;
        let k = (2.0 * e).sqrt();
        out.push(e / up);
        out.push(log_rate(&field, &target, DriftMomentum::new(k, 0.0)) - base);
    }
    Ok(out)
}

/// Detected knee energy in units of U_p; NaN when the detector cannot run.
#[wasm_bindgen]
pub fn cutoff_energy_up(wavelength_nm: f64, intensity: f64, ip_au: f64) -> f64 {
    match setup(wavelength_nm, intensity, ip_au) {
        Ok((field, target)) => match find_cutoff(&field, &target, &CutoffConfig::default()) {
            Ok(det) => det.energy / det.up,
            Err(_) => f64::NAN,
        },
        Err(_) => f64::NAN,
    }
}
