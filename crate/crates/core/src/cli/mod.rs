//! `oscillab` command-line front end.
//!
//! Every command writes a single report file (CSV or JSON) and prints its
//! path on stdout. Diagnostics go to stderr. Exit codes: 0 success,
//! 2 invalid configuration, 3 tolerance breach in a requested check,
//! 1 I/O failure.

mod commands;
mod expr;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{cmd_contract, cmd_evolve, cmd_orbit, cmd_rep, cmd_schwinger};
pub use expr::parse_real;
pub use report::{Report, RunConfig, Table, Value};

use crate::error::Error;
use crate::operator::EXACT_TOLERANCE;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BREACH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "oscillab",
    version,
    about = "Ladder algebras, contraction and cyclic systems"
)]
pub struct Cli {
    /// Output file; defaults to `<command>.<format>` in the working directory.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Tolerance for exact identities.
    #[arg(long, default_value_t = EXACT_TOLERANCE, global = true)]
    pub tolerance: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a representation and check its commutation relations.
    Rep(RepArgs),
    /// Contraction sweeps, the Holstein-Primakoff map, deformed identities.
    Contract(ContractArgs),
    /// Spectrum and period phase of the cyclic evolution operator.
    Evolve(EvolveArgs),
    /// Touch points, curves and torus density data.
    Orbit(OrbitArgs),
    /// Two-mode realization checks.
    Schwinger(SchwingerArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rep(_) => "rep",
            Command::Contract(_) => "contract",
            Command::Evolve(_) => "evolve",
            Command::Orbit(_) => "orbit",
            Command::Schwinger(_) => "schwinger",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Su2,
    Su11,
    H1,
}

#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    #[arg(long, value_enum)]
    pub algebra: AlgebraArg,
    /// su(2) label.
    #[arg(long)]
    pub l: Option<f64>,
    /// su(1,1) lowest weight.
    #[arg(long)]
    pub k: Option<f64>,
    /// Truncation dimension for su(1,1) and h(1).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Number of leading basis states on which relations are checked.
    #[arg(long)]
    pub interior: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Su2,
    Su11,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["family", "hp", "identities"])))]
pub struct ContractArgs {
    /// Run a contraction sweep over this family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Comma-separated representation labels, ascending.
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<f64>,
    /// Basis state used for the rate fit.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub interior: Option<usize>,
    /// Compare the Holstein-Primakoff map on D+(1/2) with h(1).
    #[arg(long)]
    pub hp: bool,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Check the deformed commutator and Hamiltonian identities.
    #[arg(long)]
    pub identities: bool,
    #[arg(long)]
    pub l: Option<f64>,
    #[arg(long)]
    pub tau: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Absolute,
    Omega,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    /// Number of states.
    #[arg(long = "N")]
    pub n_states: usize,
    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,
    #[arg(long, value_enum, default_value = "absolute")]
    pub units: Units,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("system").required(true).args(["thooft_n", "two_circle", "torus"])))]
pub struct OrbitArgs {
    /// Reproduce the N-site circle system.
    #[arg(long = "thooft-N")]
    pub thooft_n: Option<u64>,
    /// Circle system with ratio q-num/q-den (+ q-irr-add).
    #[arg(long)]
    pub two_circle: bool,
    #[arg(long)]
    pub q_num: Option<u64>,
    #[arg(long)]
    pub q_den: Option<u64>,
    /// Irrational offset added to the ratio, e.g. `pi/40`.
    #[arg(long)]
    pub q_irr_add: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Number of touch points; defaults to one period, or 100.
    #[arg(long)]
    pub count: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub curve_samples: usize,
    /// Jumping particle on a 2-torus.
    #[arg(long)]
    pub torus: bool,
    /// `golden` selects the golden rotation and its complement.
    #[arg(long)]
    pub ratio: Option<String>,
    /// Rotation per step of the first angle, in turns.
    #[arg(long)]
    pub rho1: Option<String>,
    #[arg(long)]
    pub rho2: Option<String>,
    #[arg(long, default_value_t = 10_000)]
    pub steps: usize,
    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,
    #[arg(long, default_value_t = 0.0)]
    pub start1: f64,
    #[arg(long, default_value_t = 0.0)]
    pub start2: f64,
    /// Also write every visited torus position.
    #[arg(long)]
    pub dump_angles: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    All,
    Casimir,
    Sectors,
    Hamiltonian,
    L2,
    None,
}

#[derive(Debug, Clone, Args)]
pub struct SchwingerArgs {
    /// Per-mode cutoff.
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub check: CheckArg,
    /// Per-mode interior bound for the L2 relation; defaults to nmax.
    #[arg(long)]
    pub interior: Option<usize>,
    #[arg(long = "omega-big", default_value_t = 1.0)]
    pub big_omega: f64,
    #[arg(long, default_value_t = 0.5)]
    pub gamma: f64,
    /// Sector label j, for --dump.
    #[arg(long, allow_hyphen_values = true)]
    pub sector: Option<f64>,
    #[arg(long)]
    pub dump: bool,
}

/// Failure modes of a command, mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

/// Runs the parsed command and returns its report without writing it.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        return Err(invalid("tolerance must be positive"));
    }
    let tol = cli.tolerance;
    match &cli.command {
        Command::Rep(a) => cmd_rep(a, tol),
        Command::Contract(a) => cmd_contract(a, tol),
        Command::Evolve(a) => cmd_evolve(a, tol),
        Command::Orbit(a) => cmd_orbit(a, tol),
        Command::Schwinger(a) => cmd_schwinger(a, tol),
    }
}

pub fn output_path(cli: &Cli) -> PathBuf {
    cli.output.clone().unwrap_or_else(|| {
        PathBuf::from(format!("{}.{}", cli.command.name(), cli.format.extension()))
    })
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_INVALID;
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            return EXIT_IO;
        }
    };
    let mut path = output_path(&cli);
    let mut report = report;
    report.param("format", cli.format.extension());
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    };
    if let Err(e) = std::fs::write(&path, text) {
        eprintln!("error: cannot write {}: {e}", path.display());
        return EXIT_IO;
    }
    if !report.breaches.is_empty() {
        for b in &report.breaches {
            eprintln!("tolerance breach: {b}");
        }
        eprintln!("report written to {}", path.display());
        return EXIT_BREACH;
    }
    path = path.canonicalize().unwrap_or(path);
    println!("{}", path.display());
    EXIT_OK
}
