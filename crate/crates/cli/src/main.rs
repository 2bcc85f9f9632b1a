//! `rindler-lab`: spectra, cross-checks, temperatures, Bogoliubov coefficients and the
//! KMS scan from the command line.

mod config;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rindler_lab::perturbation::{evaluate_at, spectrum_sweep, ScenarioSpec};
use rindler_lab::spacetime::{temperatures, HorizonInput, UnitSystem};
use rindler_lab::vacua::{
    bogoliubov, bogoliubov_numeric, kms_residual, kms_twist_residual, particle_number_foreign_vacuum,
    random_sample_pairs, BogoliubovConvention, NumberConvention, ProjectionGrid,
};
use rindler_lab::LabError;

use config::{ConfigError, Format, MethodName, Overrides, RunConfig, ScenarioName};
use output::{Cell, Table};
use verify::Status;

const THREADS_ENV: &str = "RINDLER_LAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "rindler-lab", version, about = "Acceleration radiation and Unruh thermality in 1+1 dimensions")]
struct Cli {
    /// TOML run configuration.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, value_enum)]
    method: Option<MethodName>,
    /// Frequency grid `start:stop:points[:log]`.
    #[arg(long, global = true, value_name = "SPEC", allow_hyphen_values = true)]
    grid: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sweep a scenario over the frequency grid and fit a Planck temperature.
    Spectrum {
        #[arg(long, value_enum)]
        scenario: Option<ScenarioName>,
    },
    /// Run named cross-checks (all when none are given).
    Verify {
        checks: Vec<String>,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Unruh, Hawking and infall temperatures.
    Temperatures {
        /// Proper acceleration; defaults to 1/ℓ from the config.
        #[arg(long)]
        acceleration: Option<f64>,
        /// Horizon mass.
        #[arg(long, conflicts_with = "radius")]
        mass: Option<f64>,
        /// Horizon radius r_g; defaults to the config value.
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, value_enum, default_value = "natural")]
        units: Units,
    },
    /// Bogoliubov coefficients over the grid of Rindler frequencies Ω.
    Bogoliubov {
        #[arg(long, value_enum, default_value = "standard")]
        convention: Convention,
        /// Add numerical Klein–Gordon projections.
        #[arg(long)]
        numeric: bool,
        /// Half-width of the log-null window for `--numeric`.
        #[arg(long, default_value_t = 40.0)]
        window: f64,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Locate the imaginary-time period of the Wightman function.
    KmsCheck {
        #[arg(long, default_value_t = 64)]
        pairs: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Acceleration length; defaults to the config value.
        #[arg(long)]
        ell: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Units {
    Natural,
    Si,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Convention {
    Standard,
    Literal,
}

enum Failure {
    Check(String),
    Config(String),
    Numeric(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.0)
    }
}

impl From<LabError> for Failure {
    fn from(e: LabError) -> Self {
        Failure::Numeric(e.to_string())
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Config(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Config(m) | Failure::Numeric(m) => m,
        }
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Failure::Config(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Config(format!("thread pool: {e}")))
}

fn meta(command: &str, cfg: &RunConfig) -> Value {
    json!({
        "tool": "rindler-lab",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": serde_json::to_value(cfg).expect("config serialises"),
    })
}

fn write(table: &Table, cfg: &RunConfig) -> Result<(), Failure> {
    let text = table.render(cfg.format()).map_err(Failure::Config)?;
    let path = cfg.output.path.as_deref();
    output::emit(&text, path).map_err(|e| {
        let target = path.map_or_else(|| "stdout".to_string(), |p| p.display().to_string());
        Failure::Config(format!("cannot write {target}: {e}"))
    })
}

fn run_spectrum(cfg: &RunConfig) -> Result<(), Failure> {
    let spec = ScenarioSpec { scenario: cfg.scenario.kind(), params: cfg.params.params(), method: cfg.method.method() };
    let grid = cfg.freq_grid.values();
    let (records, fit) = if grid.len() >= 4 {
        match spectrum_sweep(&spec, &grid) {
            Ok(s) => (s.records, Some((s.fitted_temperature, s.fit_residual))),
            Err(e) => {
                let rows: Vec<String> = grid
                    .iter()
                    .enumerate()
                    .filter_map(|(k, &f)| evaluate_at(&spec, f).err().map(|e| format!("row {k} (freq {f}): {e}")))
                    .collect();
                let msg = if rows.is_empty() { e.to_string() } else { rows.join("\n") };
                return Err(Failure::Numeric(msg));
            }
        }
    } else {
        let mut rows = Vec::new();
        for (k, &f) in grid.iter().enumerate() {
            rows.push(evaluate_at(&spec, f).map_err(|e| Failure::Numeric(format!("row {k} (freq {f}): {e}")))?);
        }
        (rows, None)
    };
    let mut t = Table::new(
        vec!["freq", "probability", "amplitude_re", "amplitude_im", "method", "error_estimate"],
        meta("spectrum", cfg),
    );
    for r in &records {
        t.push(vec![
            r.freq.into(),
            r.probability.into(),
            r.amplitude.map(|a| a.re).into(),
            r.amplitude.map(|a| a.im).into(),
            r.method.name().into(),
            r.error_estimate.into(),
        ]);
    }
    let (temp, res) = fit.unwrap_or((None, None));
    t.fit = vec![("fitted_temperature", temp), ("fit_residual", res)];
    write(&t, cfg)
}

fn run_verify(cfg: &RunConfig, checks: &[String], list: bool) -> Result<(), Failure> {
    if list {
        println!("{}", verify::names().join("\n"));
        return Ok(());
    }
    let requested = if checks.is_empty() { cfg.checks.clone() } else { checks.to_vec() };
    let selected = verify::select(&requested).map_err(Failure::Config)?;
    let mut t = Table::new(vec!["check_name", "status", "measured", "expected", "tolerance", "details"], meta("verify", cfg));
    let mut failed = Vec::new();
    for (name, check) in selected {
        let r = check()?;
        if r.status == Status::Fail {
            failed.push(name);
        }
        t.push(vec![
            r.check_name.into(),
            r.status.as_str().into(),
            r.measured.into(),
            r.expected.into(),
            r.tolerance.into(),
            r.details.into(),
        ]);
    }
    write(&t, cfg)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}

fn run_temperatures(
    cfg: &RunConfig,
    acceleration: Option<f64>,
    mass: Option<f64>,
    radius: Option<f64>,
    units: Units,
) -> Result<(), Failure> {
    let p = cfg.params.params();
    let alpha = acceleration.unwrap_or_else(|| p.alpha());
    let horizon = match (mass, radius) {
        (Some(m), _) => HorizonInput::Mass(m),
        (None, Some(r)) => HorizonInput::Radius(r),
        (None, None) => HorizonInput::Radius(p.rg),
    };
    let (system, unit, formulas) = match units {
        Units::Natural => (UnitSystem::Natural, "natural", ["α/2π", "1/(8πM)", "1/(4πr_g)"]),
        Units::Si => (UnitSystem::Si, "K", ["ħα/(2πck_B)", "ħc³/(8πGMk_B)", "ħc/(4πr_g k_B)"]),
    };
    let temps = temperatures(alpha, horizon, system)?;
    let mut t = Table::new(vec!["quantity", "value", "unit", "formula"], meta("temperatures", cfg));
    for ((name, value), formula) in [("T_U", temps.unruh), ("T_BH", temps.hawking), ("T_HBAR", temps.hbar)].into_iter().zip(formulas) {
        t.push(vec![name.into(), value.into(), unit.into(), formula.into()]);
    }
    write(&t, cfg)
}

fn run_bogoliubov(cfg: &RunConfig, convention: Convention, numeric: bool, window: f64, samples: usize) -> Result<(), Failure> {
    let conv = match convention {
        Convention::Standard => BogoliubovConvention::Standard,
        Convention::Literal => BogoliubovConvention::Literal,
    };
    let mut columns = vec!["omega", "alpha", "beta", "normalization_defect", "planck", "half_planck"];
    if numeric {
        columns.extend(["alpha_num_re", "alpha_num_im", "beta_num_re", "beta_num_im"]);
    }
    let mut t = Table::new(columns, meta("bogoliubov", cfg));
    let grid = ProjectionGrid::new(window, samples);
    for om in cfg.freq_grid.values() {
        let p = bogoliubov(om, conv)?;
        let mut row: Vec<Cell> = vec![
            om.into(),
            p.alpha.into(),
            p.beta.into(),
            p.normalization_defect.into(),
            particle_number_foreign_vacuum(om, NumberConvention::Standard)?.into(),
            particle_number_foreign_vacuum(om, NumberConvention::HalfPlanck)?.into(),
        ];
        if numeric {
            let (a, b, _) = bogoliubov_numeric(om, &grid)?;
            row.extend([a.re.into(), a.im.into(), b.re.into(), b.im.into()]);
        }
        t.push(row);
    }
    write(&t, cfg)
}

fn run_kms(cfg: &RunConfig, pairs: usize, seed: u64, ell: Option<f64>) -> Result<(), Failure> {
    let ell = ell.unwrap_or(cfg.params.ell);
    if !(ell > 0.0) || !ell.is_finite() {
        return Err(Failure::Config(format!("ell must be positive, got {ell}")));
    }
    let samples = random_sample_pairs(pairs, seed, ell);
    let r = kms_residual(&samples, ell)?;
    let at_period = kms_twist_residual(&samples, ell, std::f64::consts::TAU * ell)?;
    let off = kms_twist_residual(&samples, ell, 1.5 * std::f64::consts::TAU * ell)?;
    let rows: [(&str, f64, f64, f64, bool); 4] = [
        ("twist_residual_at_2pi_ell", at_period, 0.0, 1e-10, at_period <= 1e-10),
        ("temperature", r.temperature, r.expected, 1e-3 * r.expected, (r.temperature - r.expected).abs() <= 1e-3 * r.expected),
        ("period", r.period, 1.0 / r.expected, 1e-3 / r.expected, (r.period * r.expected - 1.0).abs() <= 1e-3),
        ("twist_residual_at_1.5x", off, 1e-3, 0.0, off > 1e-3),
    ];
    let mut t = Table::new(vec!["quantity", "value", "reference", "tolerance", "status"], meta("kms-check", cfg));
    let mut failed = Vec::new();
    for (name, value, reference, tol, ok) in rows {
        if !ok {
            failed.push(name);
        }
        t.push(vec![name.into(), value.into(), reference.into(), tol.into(), if ok { "pass" } else { "fail" }.into()]);
    }
    t.fit = vec![("fitted_temperature", Some(r.temperature)), ("fit_residual", Some(r.residual))];
    write(&t, cfg)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("KMS checks failed: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    init_threads()?;
    let mut cfg = RunConfig::load(cli.config.as_deref())?;
    let scenario = match &cli.command {
        Command::Spectrum { scenario } => *scenario,
        _ => None,
    };
    cfg.apply(&Overrides { output: cli.output, format: cli.format, method: cli.method, grid: cli.grid, scenario })?;
    cfg.validate()?;
    match cli.command {
        Command::Spectrum { .. } => run_spectrum(&cfg),
        Command::Verify { checks, list } => run_verify(&cfg, &checks, list),
        Command::Temperatures { acceleration, mass, radius, units } => {
            run_temperatures(&cfg, acceleration, mass, radius, units)
        }
        Command::Bogoliubov { convention, numeric, window, samples } => {
            run_bogoliubov(&cfg, convention, numeric, window, samples)
        }
        Command::KmsCheck { pairs, seed, ell } => run_kms(&cfg, pairs, seed, ell),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rindler-lab: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
