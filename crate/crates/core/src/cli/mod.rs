//! Command-line front end.
//!
//! Parsing produces a validated [`RunConfig`]; [`execute`] turns it into a
//! rendered report. Exit codes: `0` when every check passes, `1` when a
//! mathematical check fails, `2` for usage or configuration errors.

mod report;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::Field;
use crate::error::Error;

pub use report::{build_report, Report};

pub const MAX_I: u32 = 200;
pub const MAX_D: u32 = 100;
pub const MAX_N: u32 = 100;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "locoh", version, about = "Exact verification runs for graded local cohomology components")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized factorization over F_p.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Check det B_i = tau_i and the three-term recurrence for i = 1..N.
    VerifyLemma1 {
        /// Largest index, 1..=200.
        #[arg(long)]
        max_i: u32,
        /// Coefficient field: `q` or `fp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Factor tau_i over an index set and accumulate distinct factors.
    Factors {
        /// Index set with entries in 1..=200, e.g. `1..20` or `{1,7,25}`.
        #[arg(long)]
        set: String,
        /// Coefficient field: `q` or `fp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Torsion certificates and prime witnesses for d = A..B.
    Cohomology {
        /// Smallest degree, 2..=100.
        #[arg(long)]
        d_min: u32,
        /// Largest degree, 2..=100.
        #[arg(long)]
        d_max: u32,
        /// Coefficient field: `q` or `fp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Collapse checks and witness growth for the Frobenius-power family.
    Frobenius {
        /// Exponent set with entries in 6..=100, same syntax as `factors --set`.
        #[arg(long)]
        n_set: String,
        /// Coefficient field: `q` or `fp:P` for a prime P.
        #[arg(long, default_value = "q")]
        field: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    VerifyLemma1 { max_i: u32 },
    Factors { set: Vec<u32> },
    Cohomology { d_min: u32, d_max: u32 },
    Frobenius { n_set: Vec<u32> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyLemma1 { .. } => "verify-lemma1",
            Command::Factors { .. } => "factors",
            Command::Cohomology { .. } => "cohomology",
            Command::Frobenius { .. } => "frobenius",
        }
    }
}

/// A validated run: ranges are nonempty and within the desk-scale bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub field: Field,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::CheckFailed(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CertificateFailed(_) | Error::InexactDivision => CliError::CheckFailed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `N`, `A..B` (inclusive) and comma-separated lists of those,
/// optionally wrapped in braces. Result is sorted and deduplicated.
pub fn parse_index_set(expr: &str) -> Result<Vec<u32>, CliError> {
    let body = expr.trim();
    let body = match (body.strip_prefix('{'), body.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => body,
        _ => return Err(usage(format!("unbalanced braces in {expr:?}"))),
    };
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| usage(format!("{:?} is not a non-negative integer", s.trim())))
    };
    let mut out = Vec::new();
    for item in body.split(',') {
        if item.trim().is_empty() {
            return Err(usage(format!("empty item in {expr:?}")));
        }
        match item.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
                if a > b {
                    return Err(usage(format!("empty range {a}..{b}")));
                }
                out.extend(a..=b);
            }
            None => out.push(num(item)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn check_bounds(what: &str, values: &[u32], lo: u32, hi: u32) -> Result<(), CliError> {
    match values.iter().find(|&&v| v < lo || v > hi) {
        Some(v) => Err(usage(format!("{what} = {v} is outside {lo}..={hi}"))),
        None => Ok(()),
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, CliError> {
        let parse_field = |s: &str| Field::from_str(s).map_err(|e| usage(format!("--field {s}: {e}")));
        let (command, field) = match cli.command {
            CliCommand::VerifyLemma1 { max_i, field } => {
                check_bounds("max-i", &[max_i], 1, MAX_I)?;
                (Command::VerifyLemma1 { max_i }, parse_field(&field)?)
            }
            CliCommand::Factors { set, field } => {
                let set = parse_index_set(&set)?;
                check_bounds("i", &set, 1, MAX_I)?;
                (Command::Factors { set }, parse_field(&field)?)
            }
            CliCommand::Cohomology { d_min, d_max, field } => {
                check_bounds("d", &[d_min, d_max], 2, MAX_D)?;
                if d_min > d_max {
                    return Err(usage(format!("empty range d = {d_min}..{d_max}")));
                }
                (Command::Cohomology { d_min, d_max }, parse_field(&field)?)
            }
            CliCommand::Frobenius { n_set, field } => {
                let n_set = parse_index_set(&n_set)?;
                check_bounds("n", &n_set, 6, MAX_N)?;
                (Command::Frobenius { n_set }, parse_field(&field)?)
            }
        };
        Ok(RunConfig {
            command,
            field,
            seed: cli.seed,
            output: cli.output,
            format: cli.format,
        })
    }
}

/// Rendered report plus its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub rendered: String,
    pub all_pass: bool,
    pub warnings: Vec<String>,
}

pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let report = build_report(config)?;
    Ok(Outcome {
        rendered: report.render(config.format),
        all_pass: report.all_pass,
        warnings: report.warnings.clone(),
    })
}

/// Full CLI entry point; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let outcome = RunConfig::from_cli(cli).and_then(|config| {
        let outcome = execute(&config)?;
        emit(&config, &outcome.rendered)?;
        Ok(outcome)
    });
    match outcome {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if outcome.all_pass {
                EXIT_PASS
            } else {
                eprintln!("one or more checks failed");
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn emit(config: &RunConfig, rendered: &str) -> Result<(), CliError> {
    match &config.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(rendered.as_bytes())
            .map_err(|e| usage(format!("cannot write to stdout: {e}"))),
    }
}
