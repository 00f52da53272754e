//! Deterministic production of figure data: momentum-spectrum grids,
//! laser-phase scans, normalized parallel cuts and the spectrum-knee
//! detector.

use crate::error::{Error, Result};
use crate::rate::{log_rate, phase_log_rate, DriftMomentum};
use crate::units::{LaserField, Target};

/// What a [`ScanResult`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    Spectrum,
    PhaseScan,
    ParallelCut,
}

impl ScanKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScanKind::Spectrum => "spectrum",
            ScanKind::PhaseScan => "phase_scan",
            ScanKind::ParallelCut => "parallel_cut",
        }
    }
}

/// Field and target parameters attached to every scan output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanMeta {
    pub schema_version: u32,
    pub kind: ScanKind,
    pub omega: f64,
    pub f0: f64,
    pub gamma: f64,
    pub up: f64,
    pub ip: f64,
    pub normalized: bool,
    /// Peak log-rate subtracted from every entry when `normalized` is set.
    pub reference_log_rate: Option<f64>,
}

pub const SCHEMA_VERSION: u32 = 1;

/// Columnar scan output: named columns, rows in deterministic order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanResult {
    pub meta: ScanMeta,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

/// Rectangular (k_par, k_perp) grid specification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub k_par_min: f64,
    pub k_par_max: f64,
    pub k_perp_min: f64,
    pub k_perp_max: f64,
    pub n_par: usize,
    pub n_perp: usize,
    /// Subtract the grid maximum so the emitted peak is exactly zero.
    pub normalize: bool,
}

impl GridSpec {
    /// Default spectrum window [-1.5, 1.5] x [0, 1.5] in units of
    /// sqrt(2 I_p), 201 x 101 points; contains the 1/e contour at both
    /// benchmark intensities.
    pub fn default_spectrum(target: &Target) -> Self {
        let k_scale = (2.0 * target.ip()).sqrt();
        Self {
            k_par_min: -1.5 * k_scale,
            k_par_max: 1.5 * k_scale,
            k_perp_min: 0.0,
            k_perp_max: 1.5 * k_scale,
            n_par: 201,
            n_perp: 101,
            normalize: false,
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = [self.k_par_min, self.k_par_max, self.k_perp_min, self.k_perp_max]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.k_par_max <= self.k_par_min || self.k_perp_max <= self.k_perp_min {
            return Err(Error::ScanSpec("grid bounds must be finite with max > min".into()));
        }
        if self.n_par < 2 || self.n_perp < 2 {
            return Err(Error::ScanSpec("grid needs at least 2 points per axis".into()));
        }
        Ok(())
    }
}

/// Phase-scan specification: log-rate versus phi for each parallel-momentum
/// offset in `k_values`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseScanSpec {
    pub phi_min: f64,
    pub phi_max: f64,
    pub n_phi: usize,
    pub k_values: Vec<f64>,
}

impl PhaseScanSpec {
    /// Principal half-cycle [-pi/2, pi/2], 181 points, offsets
    /// {0, 0.25, 0.5} sqrt(2 I_p).
    pub fn default_scan(target: &Target) -> Self {
        let k_scale = (2.0 * target.ip()).sqrt();
        Self {
            phi_min: -std::f64::consts::FRAC_PI_2,
            phi_max: std::f64::consts::FRAC_PI_2,
            n_phi: 181,
            k_values: vec![0.0, 0.25 * k_scale, 0.5 * k_scale],
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.phi_min.is_finite() || !self.phi_max.is_finite() || self.phi_max <= self.phi_min {
            return Err(Error::ScanSpec("phase bounds must be finite with max > min".into()));
        }
        if self.n_phi < 2 {
            return Err(Error::ScanSpec("phase scan needs at least 2 points".into()));
        }
        if self.k_values.is_empty() {
            return Err(Error::ScanSpec("phase scan needs at least one k offset".into()));
        }
        Ok(())
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    let mut out: Vec<f64> = (0..n)
        .map(|i| if i == n - 1 { hi } else { lo + i as f64 * step })
        .collect();
    // a sign-symmetric range gets a sign-symmetric grid, so parity in
    // k_par holds bit for bit on grid values
    if lo == -hi {
        for i in 0..n / 2 {
            out[i] = -out[n - 1 - i];
        }
        if n % 2 == 1 {
            out[n / 2] = 0.0;
        }
    }
    out
}

fn meta_for(field: &LaserField, target: &Target, kind: ScanKind, normalized: bool) -> ScanMeta {
    ScanMeta {
        schema_version: SCHEMA_VERSION,
        kind,
        omega: field.omega(),
        f0: field.f0(),
        gamma: field.keldysh_gamma(target),
        up: field.up(),
        ip: target.ip(),
        normalized,
        reference_log_rate: None,
    }
}

/// ln Gamma over the grid, row-major with k_par as the outer loop.
pub fn spectrum_grid(field: &LaserField, target: &Target, spec: &GridSpec) -> Result<ScanResult> {
    spec.validate()?;
    let k_pars = linspace(spec.k_par_min, spec.k_par_max, spec.n_par);
    let k_perps = linspace(spec.k_perp_min, spec.k_perp_max, spec.n_perp);
    let mut rows = Vec::with_capacity(spec.n_par * spec.n_perp);
    let mut peak = f64::NEG_INFINITY;
    for &kp in &k_pars {
        for &kq in &k_perps {
            let lr = log_rate(field, target, DriftMomentum::new(kp, kq));
            peak = peak.max(lr);
            rows.push(vec![kp, kq, lr]);
        }
    }
    let mut meta = meta_for(field, target, ScanKind::Spectrum, spec.normalize);
    if spec.normalize {
        for row in &mut rows {
            row[2] -= peak;
        }
        meta.reference_log_rate = Some(peak);
    }
    Ok(ScanResult { meta, columns: vec!["k_par", "k_perp", "log_rate"], rows })
}

/// Rows of (k_offset, phi, ln Gamma(gamma, k + (F/omega) sin phi, 0)),
/// one block per offset.
pub fn phase_scan(field: &LaserField, target: &Target, spec: &PhaseScanSpec) -> Result<ScanResult> {
    spec.validate()?;
    let phis = linspace(spec.phi_min, spec.phi_max, spec.n_phi);
    let mut rows = Vec::with_capacity(spec.n_phi * spec.k_values.len());
    for &k in &spec.k_values {
        let drift = DriftMomentum::new(k, 0.0);
        for &phi in &phis {
            rows.push(vec![k, phi, phase_log_rate(field, target, drift, phi)]);
        }
    }
    Ok(ScanResult {
        meta: meta_for(field, target, ScanKind::PhaseScan, false),
        columns: vec!["k_offset", "phi", "log_rate"],
        rows,
    })
}

/// ln[Gamma(k_par, 0) / Gamma(0, 0)] at the given parallel momenta,
/// computed as a log-domain difference.
pub fn parallel_cut_normalized(
    field: &LaserField,
    target: &Target,
    k_par_values: &[f64],
) -> Result<ScanResult> {
    if k_par_values.is_empty() {
        return Err(Error::ScanSpec("cut needs at least one k_par value".into()));
    }
    let base = log_rate(field, target, DriftMomentum::zero());
    let rows = k_par_values
        .iter()
        .map(|&kp| vec![kp, log_rate(field, target, DriftMomentum::new(kp, 0.0)) - base])
        .collect();
    let mut meta = meta_for(field, target, ScanKind::ParallelCut, true);
    meta.reference_log_rate = Some(base);
    Ok(ScanResult { meta, columns: vec!["k_par", "log_ratio"], rows })
}

/// Knee-detector configuration. The fractional threshold is a calibration
/// choice; it is configuration, not a hidden constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffConfig {
    /// Points of the log-spaced energy grid.
    pub n_points: usize,
    /// Scan window [e_min_up, e_max_up] in units of U_p.
    pub e_min_up: f64,
    pub e_max_up: f64,
    /// The knee is where |d^2 log-ratio / dE^2| first climbs to this
    /// fraction of the way from its low-energy baseline up to its peak.
    pub edge_fraction: f64,
}

impl Default for CutoffConfig {
    fn default() -> Self {
        Self { n_points: 400, e_min_up: 0.1, e_max_up: 10.0, edge_fraction: 0.74 }
    }
}

/// Detected spectrum knee.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffDetection {
    /// Kinetic energy E = k_par^2 / 2 of the knee, a.u.
    pub energy: f64,
    pub up: f64,
    /// gamma <= 1; on the multiphoton side the spectrum has no classical
    /// knee and the value is reported for reference only.
    pub in_tunneling_regime: bool,
    /// Set when a second, non-adjacent curvature extremum comes within 1%
    /// of the global one.
    pub ambiguous: bool,
}

/// Locate the knee of ln[Gamma(k_par,0)/Gamma(0,0)] as a function of the
/// kinetic energy E = k_par^2/2.
///
/// On a log-spaced energy grid the curve's second derivative with respect
/// to E rises from a flat low-energy baseline to a single peak past the
/// classical boundary; the knee is reported at the rising-edge crossing of
/// `edge_fraction` between baseline and peak, interpolated in ln E.
pub fn find_cutoff(field: &LaserField, target: &Target, cfg: &CutoffConfig) -> Result<CutoffDetection> {
    if cfg.n_points < 16 {
        return Err(Error::ScanSpec("cutoff grid needs at least 16 points".into()));
    }
    if cfg.e_min_up <= 0.0 || cfg.e_max_up <= cfg.e_min_up || !cfg.e_max_up.is_finite() {
        return Err(Error::ScanSpec("cutoff window must satisfy 0 < e_min < e_max".into()));
    }
    if cfg.edge_fraction <= 0.0 || cfg.edge_fraction >= 1.0 || cfg.edge_fraction.is_nan() {
        return Err(Error::ScanSpec("edge_fraction must lie in (0, 1)".into()));
    }
    let up = field.up();
    let gamma = field.keldysh_gamma(target);
    let base_rate = log_rate(field, target, DriftMomentum::zero());

    let n = cfg.n_points;
    let ln_lo = (cfg.e_min_up * up).ln();
    let ln_hi = (cfg.e_max_up * up).ln();
    let energies: Vec<f64> = (0..n)
        .map(|i| (ln_lo + (ln_hi - ln_lo) * i as f64 / (n - 1) as f64).exp())
        .collect();
    let ratios: Vec<f64> = energies
        .iter()
        .map(|&e| {
            log_rate(field, target, DriftMomentum::new((2.0 * e).sqrt(), 0.0)) - base_rate
        })
        .collect();

    // |d2 ratio / dE2| on the non-uniform grid, at interior points
    let curv: Vec<f64> = (1..n - 1)
        .map(|i| {
            let h1 = energies[i] - energies[i - 1];
            let h2 = energies[i + 1] - energies[i];
            let d2 = 2.0
                * ((ratios[i + 1] - ratios[i]) / h2 - (ratios[i] - ratios[i - 1]) / h1)
                / (h1 + h2);
            d2.abs()
        })
        .collect();

    let peak_idx = curv
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).expect("finite curvature"))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    let peak = curv[peak_idx];

    // ambiguity: another local maximum within 1% of the global peak
    let mut ambiguous = false;
    for i in 1..curv.len() - 1 {
        if i.abs_diff(peak_idx) <= 1 {
            continue;
        }
        if curv[i] >= curv[i - 1] && curv[i] >= curv[i + 1] && curv[i] >= 0.99 * peak {
            ambiguous = true;
            break;
        }
    }

    let baseline = {
        let mut head: Vec<f64> = curv[..(curv.len() / 10).max(3)].to_vec();
        head.sort_by(|a, b| a.partial_cmp(b).expect("finite curvature"));
        let m = head.len();
        if m % 2 == 1 { head[m / 2] } else { 0.5 * (head[m / 2 - 1] + head[m / 2]) }
    };
    let threshold = baseline + cfg.edge_fraction * (peak - baseline);

    let mut energy = energies[peak_idx + 1];
    for i in 1..=peak_idx {
        if curv[i] >= threshold {
            // interpolate the crossing in ln E between interior points i-1 and i
            let rise = curv[i] - curv[i - 1];
            let t = if rise > 0.0 { ((threshold - curv[i - 1]) / rise).clamp(0.0, 1.0) } else { 1.0 };
            let ln_e = energies[i].ln() + t * (energies[i + 1].ln() - energies[i].ln());
            energy = ln_e.exp();
            break;
        }
    }

    Ok(CutoffDetection {
        energy,
        up,
        in_tunneling_regime: gamma <= 1.0,
        ambiguous,
    })
}

/// Momentum axis selector for axis cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Parallel,
    Perpendicular,
}

/// Momentum at which Gamma falls to 1/e of its k = 0 value along one axis,
/// located by bisection.
pub fn one_over_e_half_width(field: &LaserField, target: &Target, axis: Axis) -> f64 {
    let base = log_rate(field, target, DriftMomentum::zero());
    let drop = |k: f64| {
        let m = match axis {
            Axis::Parallel => DriftMomentum::new(k, 0.0),
            Axis::Perpendicular => DriftMomentum::new(0.0, k),
        };
        log_rate(field, target, m) - base + 1.0
    };
    let mut lo = 0.0;
    let mut hi = (2.0 * target.ip()).sqrt();
    while drop(hi) > 0.0 {
        hi *= 2.0;
        assert!(hi < 1e6, "1/e width out of range");
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if drop(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}
