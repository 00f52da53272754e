//! Command-line front end: parameter intake, subcommand dispatch, CSV/JSON
//! emission.
//!
//! Exit codes: 0 success, 1 failed verification (oracle-check above
//! tolerance), 2 parameter error, 3 I/O error.

use sfi_cli::output;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

use output::{Cell, Table};
use sfi_core::limits::{compare_limit, LimitKind, RegimeThresholds};
use sfi_core::oracle::{run_suite, DEFAULT_SUITE_SEED, SUITE_TOLERANCE};
use sfi_core::rate::{evaluate, DriftMomentum};
use sfi_core::scan::{
    find_cutoff, parallel_cut_normalized, phase_scan, spectrum_grid, CutoffConfig, GridSpec,
    PhaseScanSpec, SCHEMA_VERSION,
};
use sfi_core::units::{ip_from_ev, LabLaser, LaserField, Target, HYDROGEN_IP_AU};

/// Environment variable providing the directory against which relative
/// `--out` paths are resolved.
const OUT_DIR_ENV: &str = "SFI_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "sfi",
    about = "Instantaneous strong-field ionization rates over momentum and laser phase",
    version
)]
struct Cli {
    /// Laser wavelength, nm
    #[arg(long, global = true, default_value_t = 800.0)]
    wavelength_nm: f64,

    /// Laser peak intensity, W/cm^2
    #[arg(long, global = true, default_value_t = 1e13)]
    intensity: f64,

    /// Ionization potential, atomic units (default: hydrogen, 0.5)
    #[arg(long, global = true, conflicts_with = "ip_ev")]
    ip_au: Option<f64>,

    /// Ionization potential, eV
    #[arg(long, global = true)]
    ip_ev: Option<f64>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Output file; stdout when omitted. Relative paths resolve against
    /// $SFI_OUT_DIR when that is set.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the rate at a single drift momentum
    Rate {
        /// Drift momentum along the polarization, a.u.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        kpar: f64,
        /// Drift momentum perpendicular to the polarization, a.u.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        kperp: f64,
        /// Also emit the exponentiated rate (may underflow to zero)
        #[arg(long)]
        linear: bool,
    },
    /// ln Gamma over a (k_par, k_perp) grid
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        kpar_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        kpar_max: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        kperp_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        kperp_max: Option<f64>,
        #[arg(long)]
        npar: Option<usize>,
        #[arg(long)]
        nperp: Option<usize>,
        /// Subtract the grid peak so the maximum emitted value is 0
        #[arg(long)]
        normalize: bool,
    },
    /// ln Gamma versus laser phase for a list of parallel-momentum offsets
    PhaseScan {
        #[arg(long, allow_hyphen_values = true)]
        phi_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        phi_max: Option<f64>,
        #[arg(long)]
        nphi: Option<usize>,
        /// Comma-separated offsets, a.u.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k_offsets: Option<Vec<f64>>,
    },
    /// ln of the parallel-momentum distribution normalized to k = 0
    Cut {
        /// Largest k_par, a.u. (default sqrt(20 Up): kinetic energy 10 Up)
        #[arg(long)]
        kpar_max: Option<f64>,
        #[arg(long, default_value_t = 201)]
        n: usize,
    },
    /// Detect the spectrum knee and compare it with 2 Up
    Cutoff {
        #[arg(long, default_value_t = 400)]
        n_points: usize,
        #[arg(long, default_value_t = 0.74)]
        edge_fraction: f64,
    },
    /// Tabulate every limit formula against the general exponent
    Limits {
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        kpar: f64,
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        kperp: f64,
    },
    /// Run the seeded random verification suite
    OracleCheck {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SUITE_SEED)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Param(String),
    CheckFailed(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Param(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Param(m) | CliError::CheckFailed(m) | CliError::Io(m) => m,
        }
    }
}

impl From<sfi_core::Error> for CliError {
    fn from(e: sfi_core::Error) -> Self {
        CliError::Param(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let lab = LabLaser::new(cli.wavelength_nm, cli.intensity)?;
    let field = LaserField::from_lab(&lab)?;
    let target = match (cli.ip_au, cli.ip_ev) {
        (Some(au), None) => Target::new(au)?,
        (None, Some(ev)) => Target::new(ip_from_ev(ev)?)?,
        (None, None) => Target::new(HYDROGEN_IP_AU)?,
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting flags"),
    };

    let table = match &cli.command {
        Command::Rate { kpar, kperp, linear } => {
            let k = DriftMomentum::new(*kpar, *kperp);
            let eval = evaluate(&field, &target, k);
            let mut columns: Vec<String> = [
                "omega_au", "f0_au", "gamma", "up_au", "ip_au", "k_par", "k_perp", "alpha",
                "beta", "f", "log_rate",
            ]
            .map(String::from)
            .to_vec();
            let mut row = vec![
                Cell::F64(field.omega()),
                Cell::F64(field.f0()),
                Cell::F64(field.keldysh_gamma(&target)),
                Cell::F64(field.up()),
                Cell::F64(target.ip()),
                Cell::F64(k.k_par()),
                Cell::F64(k.k_perp()),
                Cell::F64(eval.alpha),
                Cell::F64(eval.beta),
                Cell::F64(eval.f),
                Cell::F64(eval.log_rate),
            ];
            if *linear {
                columns.push("rate".into());
                row.push(Cell::F64(eval.log_rate.exp()));
            }
            Table { meta: record_meta("rate", cli), columns, rows: vec![row] }
        }
        Command::Spectrum {
            kpar_min,
            kpar_max,
            kperp_min,
            kperp_max,
            npar,
            nperp,
            normalize,
        } => {
            let mut spec = GridSpec::default_spectrum(&target);
            if let Some(v) = kpar_min {
                spec.k_par_min = *v;
            }
            if let Some(v) = kpar_max {
                spec.k_par_max = *v;
            }
            if let Some(v) = kperp_min {
                spec.k_perp_min = *v;
            }
            if let Some(v) = kperp_max {
                spec.k_perp_max = *v;
            }
            if let Some(v) = npar {
                spec.n_par = *v;
            }
            if let Some(v) = nperp {
                spec.n_perp = *v;
            }
            spec.normalize = *normalize;
            Table::from_scan(&spectrum_grid(&field, &target, &spec)?, &lab_meta(cli))
        }
        Command::PhaseScan { phi_min, phi_max, nphi, k_offsets } => {
            let mut spec = PhaseScanSpec::default_scan(&target);
            if let Some(v) = phi_min {
                spec.phi_min = *v;
            }
            if let Some(v) = phi_max {
                spec.phi_max = *v;
            }
            if let Some(v) = nphi {
                spec.n_phi = *v;
            }
            if let Some(v) = k_offsets {
                spec.k_values = v.clone();
            }
            Table::from_scan(&phase_scan(&field, &target, &spec)?, &lab_meta(cli))
        }
        Command::Cut { kpar_max, n } => {
            if *n < 2 {
                return Err(CliError::Param("cut needs at least 2 points".into()));
            }
            let hi = kpar_max.unwrap_or_else(|| (20.0 * field.up()).sqrt());
            if hi <= 0.0 || !hi.is_finite() {
                return Err(CliError::Param("kpar-max must be positive".into()));
            }
            let ks: Vec<f64> = (0..*n)
                .map(|i| i as f64 * hi / (*n as f64 - 1.0))
                .collect();
            Table::from_scan(&parallel_cut_normalized(&field, &target, &ks)?, &lab_meta(cli))
        }
        Command::Cutoff { n_points, edge_fraction } => {
            let cfg = CutoffConfig {
                n_points: *n_points,
                edge_fraction: *edge_fraction,
                ..Default::default()
            };
            let det = find_cutoff(&field, &target, &cfg)?;
            Table {
                meta: record_meta("cutoff", cli),
                columns: ["energy_au", "up_au", "energy_over_2up", "in_tunneling_regime", "ambiguous"]
                    .map(String::from)
                    .to_vec(),
                rows: vec![vec![
                    Cell::F64(det.energy),
                    Cell::F64(det.up),
                    Cell::F64(det.energy / (2.0 * det.up)),
                    Cell::Bool(det.in_tunneling_regime),
                    Cell::Bool(det.ambiguous),
                ]],
            }
        }
        Command::Limits { kpar, kperp } => {
            let thresholds = RegimeThresholds::default();
            let mut rows = Vec::new();
            for kind in LimitKind::ALL {
                let k = match kind {
                    LimitKind::Keldysh => DriftMomentum::zero(),
                    LimitKind::CorkumParallel
                    | LimitKind::KrainovHighEnergy
                    | LimitKind::KrainovAsymptotic => DriftMomentum::new(*kpar, 0.0),
                    LimitKind::DelonePerp
                    | LimitKind::IvanovPerpSmall
                    | LimitKind::PerpAsymptotic => DriftMomentum::new(0.0, *kperp),
                    LimitKind::PptExpansion => DriftMomentum::new(*kpar, *kperp),
                };
                match compare_limit(kind, &field, &target, k, &thresholds) {
                    Ok(rep) => rows.push(vec![
                        Cell::Str(kind.name().into()),
                        Cell::F64(k.k_par()),
                        Cell::F64(k.k_perp()),
                        Cell::Bool(rep.in_validity_regime),
                        Cell::F64(rep.general_log_rate),
                        Cell::F64(rep.limit_log_rate),
                        Cell::F64(rep.abs_diff),
                        Cell::F64(rep.rel_diff),
                    ]),
                    Err(e) => eprintln!("note: {} skipped: {e}", kind.name()),
                }
            }
            Table {
                meta: record_meta("limits", cli),
                columns: [
                    "limit", "k_par", "k_perp", "in_regime", "general_log_rate",
                    "limit_log_rate", "abs_diff", "rel_diff",
                ]
                .map(String::from)
                .to_vec(),
                rows,
            }
        }
        Command::OracleCheck { n, seed } => {
            if *n == 0 {
                return Err(CliError::Param("suite needs at least one point".into()));
            }
            let summary = run_suite(*n, *seed)
                .map_err(|e| CliError::CheckFailed(format!("oracle suite error: {e}")))?;
            let table = Table {
                meta: record_meta("oracle_check", cli),
                columns: [
                    "n", "seed", "max_rel_dev", "median_rel_dev", "max_analytic_residual",
                    "max_t0_component_dev", "tolerance", "passed",
                ]
                .map(String::from)
                .to_vec(),
                rows: vec![vec![
                    Cell::U64(summary.n as u64),
                    Cell::U64(*seed),
                    Cell::F64(summary.max_rel_dev),
                    Cell::F64(summary.median_rel_dev),
                    Cell::F64(summary.max_analytic_residual),
                    Cell::F64(summary.max_t0_component_dev),
                    Cell::F64(SUITE_TOLERANCE),
                    Cell::Bool(summary.passed),
                ]],
            };
            emit(cli, &table)?;
            if !summary.passed {
                return Err(CliError::CheckFailed(format!(
                    "oracle suite failed: max relative deviation {:e} exceeds {:e}",
                    summary.max_rel_dev, SUITE_TOLERANCE
                )));
            }
            return Ok(());
        }
    };

    emit(cli, &table)
}

fn lab_meta(cli: &Cli) -> Vec<(String, Cell)> {
    vec![
        ("wavelength_nm".into(), Cell::F64(cli.wavelength_nm)),
        ("intensity_w_cm2".into(), Cell::F64(cli.intensity)),
    ]
}

fn record_meta(kind: &str, cli: &Cli) -> Vec<(String, Cell)> {
    let mut meta = vec![
        ("schema_version".into(), Cell::U64(SCHEMA_VERSION as u64)),
        ("kind".into(), Cell::Str(kind.into())),
    ];
    meta.extend(lab_meta(cli));
    meta
}

fn emit(cli: &Cli, table: &Table) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match &cli.out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => {
            let resolved = resolve_out(path);
            std::fs::write(&resolved, body)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", resolved.display())))
        }
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}
