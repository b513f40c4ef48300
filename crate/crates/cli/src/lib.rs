//! Command-line front end for `commdeg`.
//!
//! [`run_args`] parses arguments and returns the exit code together with
//! everything that would go to stdout and stderr, so the binary and the
//! tests share one path. Exit codes: 0 success, 1 input error, 2 a checked
//! invariant failed.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod input;
mod render;

pub use input::{Caps, Source};

/// Version tag carried in every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "commdeg", version, about = "Exact relative commutativity degrees of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pr(H,G) and the commutator distribution Pr_g(H,G) for selected subgroups.
    Stats(StatsArgs),
    /// Every bound on Pr(H,G), equality flags and threshold verdicts.
    Bounds(GroupArgs),
    /// Search for (or verify) an isoclinism between two pairs.
    Isoclinic(IsoclinicArgs),
    /// Run every enforced invariant over the shipped catalog.
    VerifyTheorems {
        #[arg(long, default_value_t = 128)]
        max_order: usize,
    },
    /// List group families and the shipped catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum CatalogAction {
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Group spec, e.g. `Q:8` or `D:8 x C:3`.
    #[arg(long)]
    pub group: Option<String>,
    /// Cayley-table file.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Permutation generator file, one generator per line in cycle notation.
    #[arg(long)]
    pub perms: Option<PathBuf>,
}

impl SourceArgs {
    pub fn source(&self) -> Source {
        match (&self.group, &self.table, &self.perms) {
            (Some(g), _, _) => Source::Spec(g.clone()),
            (_, Some(t), _) => Source::Table(t.clone()),
            (_, _, Some(p)) => Source::Perms(p.clone()),
            _ => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// `all`, `maximal`, `default`, `gen:a,b,…` or a landmark (`G`, `center`,
    /// `derived`, `gamma2`, `Z1`, `sylow2`, …).
    #[arg(long, default_value = "G")]
    pub subgroup: String,
    /// Keep only this many of the selected subgroups, chosen by `--seed`.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct StatsArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Number of factors in the commutator; above 2 the tuple is (H, G, …, G).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub arity: u32,
}

#[derive(Args, Debug, Clone)]
pub struct IsoclinicArgs {
    /// First group: a spec, `table:PATH` or `perms:PATH`.
    #[arg(long)]
    pub pair1: String,
    #[arg(long)]
    pub pair2: String,
    /// Subgroup of the first group (landmark or `gen:…`).
    #[arg(long, default_value = "G")]
    pub sub1: String,
    #[arg(long, default_value = "G")]
    pub sub2: String,
    /// Verify this witness (bare or inside an `isoclinic` report) instead of searching.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct CapArgs {
    /// Largest group order built.
    #[arg(long, global = true, env = "COMMDEG_ORDER_CAP", default_value_t = commdeg::group::DEFAULT_ORDER_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub order_cap: u64,
    /// Largest group order whose subgroup lattice is enumerated.
    #[arg(long, global = true, env = "COMMDEG_LATTICE_CAP", default_value_t = commdeg::catalog::DEFAULT_LATTICE_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub lattice_cap: u64,
    /// Largest number of tuples enumerated for multi-commutators.
    #[arg(long, global = true, env = "COMMDEG_WORK_CAP", default_value_t = commdeg::stats::DEFAULT_WORK_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub work_cap: u64,
    /// Node budget of the isoclinism search.
    #[arg(long, global = true, env = "COMMDEG_BUDGET", default_value_t = commdeg::isoclinism::DEFAULT_NODE_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Largest central quotient the isoclinism search accepts.
    #[arg(long, global = true, env = "COMMDEG_QUOTIENT_CAP", default_value_t = commdeg::isoclinism::DEFAULT_QUOTIENT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub quotient_cap: u64,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        Caps {
            order: self.order_cap as usize,
            lattice: self.lattice_cap as usize,
            work: self.work_cap as u128,
            budget: self.budget,
            quotient: self.quotient_cap as usize,
        }
    }
}

/// An input error with its stable code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl From<commdeg::Error> for CliError {
    fn from(e: commdeg::Error) -> Self {
        CliError::new(e.code(), e.to_string())
    }
}

/// What a run produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn input_error(e: &CliError) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: format!("{e}\n") }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let caps = cli.caps.caps();
    let result = match &cli.command {
        Command::Stats(args) => commands::stats(args, cli.format, &caps),
        Command::Bounds(args) => commands::bounds(args, cli.format, &caps),
        Command::Isoclinic(args) => commands::isoclinic(args, cli.format, &caps),
        Command::VerifyTheorems { max_order } => commands::verify_theorems(*max_order, cli.format, &caps),
        Command::Catalog { action: CatalogAction::List } => Ok(Outcome::ok(commands::catalog_list(cli.format))),
    };
    result.unwrap_or_else(|e| Outcome::input_error(&e))
}

/// Parses `args` (program name first) and runs. Usage errors exit 1.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
            _ => Outcome { code: 1, stdout: String::new(), stderr: format!("E_USAGE: {e}") },
        },
    }
}
