//! Command-line front end: data files for the decay curves, the rate law and
//! the Taylor table, plus the validation suites.
//!
//! Exit codes: 0 success, 2 usage error, 3 validation failure, 4 budget exceeded.
//! `CHIRALIX_THREADS` caps the worker pool.

mod output;
mod validate;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use output::{format_number, Cell, Table};
pub use validate::{run_suites, Check, Level, ValidationOptions};

use crate::decay::{auto_rank, s_finite, KernelDeterminant, KernelDiagonal};
use crate::error::Error;
use crate::exact::oracle_sn;
use crate::series::{decay_rate, fitted_decay_rate, reference_coefficient, taylor_coefficients};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

pub const THREADS_ENV: &str = "CHIRALIX_THREADS";

/// Largest ring for the finite determinant path.
pub const FINITE_MAX_QUBITS: usize = 50;
/// Largest ring for the exact-evolution overlay.
pub const ORACLE_MAX_QUBITS: usize = 12;
const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Kernel rank: a fixed value or chosen per time point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RankChoice {
    Auto,
    Fixed(usize),
}

impl FromStr for RankChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Self::Auto);
        }
        match s.parse::<usize>() {
            Ok(r) if r >= 1 => Ok(Self::Fixed(r)),
            _ => Err(format!("rank must be a positive integer or \"auto\", got {s:?}")),
        }
    }
}

impl TryFrom<String> for RankChoice {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<RankChoice> for String {
    fn from(r: RankChoice) -> Self {
        match r {
            RankChoice::Auto => "auto".into(),
            RankChoice::Fixed(r) => r.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Subcommand)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// S_N(t) from the finite-ring determinant.
    Finite {
        /// Ring size (even, 4..=50).
        #[arg(short = 'n', long = "n-qubits")]
        n_qubits: usize,
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        dt: f64,
        /// Add a column from exact evolution (N <= 12).
        #[arg(long)]
        #[serde(default)]
        oracle: bool,
    },
    /// S(r, t) from the Bessel-kernel determinant.
    Infinite {
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        dt: f64,
        /// Fixed rank or "auto".
        #[arg(long, default_value = "auto")]
        rank: RankChoice,
    },
    /// Decay rate gamma against Q/pi on [0, 1].
    Rate {
        #[arg(long, default_value_t = 41)]
        samples: usize,
        /// Add rates fitted from the kernel determinant.
        #[arg(long)]
        #[serde(default)]
        fitted: bool,
    },
    /// Taylor coefficients C_N(n) against the thermodynamic series.
    Taylor {
        #[arg(short = 'n', long = "n-qubits")]
        n_qubits: usize,
        #[arg(long)]
        order: usize,
    },
    /// Runs the invariant suites.
    Validate {
        #[arg(value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Negative control: evaluate the kernel diagonal literally.
        #[arg(long, hide = true)]
        #[serde(default)]
        corrupt_kernel_diagonal: bool,
    },
}

#[derive(Debug, Parser)]
#[command(name = "chiralix", version, about = "Spin-helix relaxation in the XX ring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,
    /// Write the run configuration as JSON ("-" for stdout) and exit.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_config: Option<PathBuf>,
    /// Run a configuration written by --dump-config.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

/// Everything needed to reproduce a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub verbosity: u8,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("{0}")]
    Budget(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// `0, dt, 2 dt, ..` up to `t_max`.
pub fn time_grid(t_max: f64, dt: f64) -> Result<Vec<f64>, CliError> {
    if !t_max.is_finite() || t_max < 0.0 {
        return Err(CliError::Usage(format!("t_max must be finite and >= 0, got {t_max}")));
    }
    if !dt.is_finite() || dt <= 0.0 {
        return Err(CliError::Usage(format!("dt must be finite and > 0, got {dt}")));
    }
    let steps = (t_max / dt + 1e-9).floor();
    if steps >= MAX_GRID_POINTS as f64 {
        return Err(CliError::Usage(format!("grid of {steps} points is too large")));
    }
    Ok((0..=steps as usize).map(|i| i as f64 * dt).collect())
}

fn log10_abs(v: f64) -> f64 {
    v.abs().log10()
}

pub fn cmd_finite(n_qubits: usize, t_max: f64, dt: f64, oracle: bool) -> Result<Table, CliError> {
    if n_qubits > FINITE_MAX_QUBITS {
        return Err(CliError::Budget(format!(
            "N = {n_qubits} exceeds the determinant budget {FINITE_MAX_QUBITS}"
        )));
    }
    if oracle && n_qubits > ORACLE_MAX_QUBITS {
        return Err(CliError::Budget(format!(
            "oracle overlay limited to N <= {ORACLE_MAX_QUBITS}, got {n_qubits}"
        )));
    }
    let grid = time_grid(t_max, dt)?;
    let values: Vec<f64> = grid
        .par_iter()
        .map(|&t| s_finite(n_qubits, t))
        .collect::<crate::Result<_>>()?;
    let exact = if oracle {
        Some(oracle_sn(n_qubits, &grid)?.values().collect::<Vec<f64>>())
    } else {
        None
    };
    let mut columns = vec!["t", "S_N", "log10_abs_S_N"];
    if oracle {
        columns.push("S_N_oracle");
    }
    let mut table = Table::new(&columns)
        .meta("command", "finite")
        .meta("N", n_qubits)
        .meta("t_max", format_number(t_max))
        .meta("dt", format_number(dt));
    for (i, (&t, &s)) in grid.iter().zip(&values).enumerate() {
        let mut row = vec![Cell::Num(t), Cell::Num(s), Cell::Num(log10_abs(s))];
        if let Some(e) = &exact {
            row.push(Cell::Num(e[i]));
        }
        table.push(row);
    }
    Ok(table)
}

pub fn cmd_infinite(t_max: f64, dt: f64, rank: RankChoice) -> Result<Table, CliError> {
    let grid = time_grid(t_max, dt)?;
    let rows: Vec<(f64, usize, KernelDeterminant)> = grid
        .par_iter()
        .map(|&t| {
            let r = match rank {
                RankChoice::Auto => auto_rank(t, 1.0),
                RankChoice::Fixed(r) => r,
            };
            Ok((t, r, KernelDeterminant::new(r, t)?))
        })
        .collect::<crate::Result<_>>()?;
    let mut table = Table::new(&["t", "r_used", "S", "log10_S"])
        .meta("command", "infinite")
        .meta("t_max", format_number(t_max))
        .meta("dt", format_number(dt))
        .meta("rank", String::from(rank));
    for (t, r, kd) in rows {
        table.push(vec![Cell::Num(t), Cell::Int(r as i64), Cell::Num(kd.s()), Cell::Num(kd.log10_s())]);
    }
    Ok(table)
}

pub fn cmd_rate(samples: usize, fitted: bool) -> Result<Table, CliError> {
    if samples < 2 {
        return Err(CliError::Usage(format!("samples must be >= 2, got {samples}")));
    }
    let xs: Vec<f64> = (0..samples).map(|i| i as f64 / (samples - 1) as f64).collect();
    let fits: Option<Vec<f64>> = if fitted {
        Some(
            xs.par_iter()
                .map(|&x| fitted_decay_rate(x, (6.0, 14.0)))
                .collect::<crate::Result<_>>()?,
        )
    } else {
        None
    };
    let mut columns = vec!["q_over_pi", "gamma_closed_form"];
    if fitted {
        columns.push("gamma_fitted");
    }
    let mut table = Table::new(&columns).meta("command", "rate").meta("samples", samples);
    for (i, &x) in xs.iter().enumerate() {
        let mut row = vec![Cell::Num(x), Cell::Num(decay_rate(x))];
        if let Some(f) = &fits {
            row.push(Cell::Num(f[i]));
        }
        table.push(row);
    }
    Ok(table)
}

pub fn cmd_taylor(n_qubits: usize, order: usize) -> Result<Table, CliError> {
    let coefficients = taylor_coefficients(n_qubits, order)?;
    let mut table = Table::new(&["n", "C_N", "C_reference", "abs_diff"])
        .meta("command", "taylor")
        .meta("N", n_qubits)
        .meta("order", order)
        .meta("stable_through", (2 * n_qubits).saturating_sub(4));
    for (n, &c) in coefficients.coefficients.iter().enumerate() {
        let (reference, diff) = match reference_coefficient(n) {
            Some(r) => (Cell::Num(r), Cell::Num((c - r).abs())),
            None => (Cell::Blank, Cell::Blank),
        };
        table.push(vec![Cell::Int(n as i64), Cell::Num(c), reference, diff]);
    }
    Ok(table)
}

/// Returns the report and whether every check passed.
pub fn cmd_validate(level: Level, corrupt_kernel_diagonal: bool, verbosity: u8) -> (Table, bool) {
    let options = ValidationOptions {
        level,
        kernel_diagonal: if corrupt_kernel_diagonal {
            KernelDiagonal::Literal
        } else {
            KernelDiagonal::Regularized
        },
    };
    let (checks, seconds) = run_suites(options);
    if verbosity > 0 {
        eprintln!("validation finished in {seconds:.2} s");
    }
    let level_name = match level {
        Level::Quick => "quick",
        Level::Full => "full",
    };
    let mut table = Table::new(&["check", "passed", "measured", "tolerance", "detail"])
        .meta("command", "validate")
        .meta("level", level_name);
    let mut ok = true;
    for c in checks {
        ok &= c.passed;
        table.push(vec![
            Cell::Text(c.name.into()),
            Cell::Text(c.passed.to_string()),
            Cell::Num(c.measured),
            Cell::Num(c.tolerance),
            Cell::Text(c.detail.replace(',', ";")),
        ]);
    }
    (table, ok)
}

fn failed_checks(table: &Table) -> Vec<String> {
    table
        .rows
        .iter()
        .filter(|row| row[1] == Cell::Text("false".into()))
        .filter_map(|row| match &row[0] {
            Cell::Text(name) => Some(name.clone()),
            _ => None,
        })
        .collect()
}

fn write_table(table: &Table, format: Format, out: Option<&Path>) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            CliError::Usage(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => table.write_csv(&mut sink)?,
        Format::Json => table.write_json(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

/// Runs a configuration; the table is written before a validation failure is reported.
pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    let (table, passed) = match &config.command {
        Command::Finite {
            n_qubits,
            t_max,
            dt,
            oracle,
        } => (cmd_finite(*n_qubits, *t_max, *dt, *oracle)?, true),
        Command::Infinite { t_max, dt, rank } => (cmd_infinite(*t_max, *dt, *rank)?, true),
        Command::Rate { samples, fitted } => (cmd_rate(*samples, *fitted)?, true),
        Command::Taylor { n_qubits, order } => (cmd_taylor(*n_qubits, *order)?, true),
        Command::Validate {
            level,
            corrupt_kernel_diagonal,
        } => cmd_validate(*level, *corrupt_kernel_diagonal, config.verbosity),
    };
    write_table(&table, config.format, config.out.as_deref())?;
    if !passed {
        return Err(CliError::Validation(failed_checks(&table).join(", ")));
    }
    Ok(())
}

fn thread_cap() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let config = match (&cli.config, cli.command) {
        (Some(path), None) => RunConfig::load(path)?,
        (Some(_), Some(_)) => return Err(CliError::Usage("--config replaces the subcommand".into())),
        (None, Some(command)) => RunConfig {
            command,
            format: cli.format,
            out: cli.out,
            verbosity: cli.verbose,
        },
        (None, None) => return Err(CliError::Usage("missing subcommand (see --help)".into())),
    };
    if let Some(path) = &cli.dump_config {
        let text = config.to_json();
        if path.as_os_str() == "-" {
            println!("{text}");
        } else {
            std::fs::write(path, text + "\n")?;
        }
        return Ok(());
    }
    match thread_cap()? {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| execute(&config))
        }
        None => execute(&config),
    }
}

/// Entry point shared by the binary and tests; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("chiralix: {e}");
            e.exit_code()
        }
    }
}
