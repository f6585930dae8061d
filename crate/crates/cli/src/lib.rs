//! The `spw` command line: argument handling, command execution and report
//! formatting. [`run`] is the whole program minus process exit.

mod commands;
mod config;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::Config;
pub use report::{Format, Report, SCHEMA};

use spw_core::Error;

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const EMPTY: i32 = 3;
    pub const BUDGET: i32 = 4;
    pub const CERTIFICATION: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "spw", version, about = "Exact string cones and string polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Face and word enumeration budget (overrides SPW_BUDGET and the config file).
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// Config file with `budget`, `trust_external` and `cones = [...]` entries.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Accept external cone files that fail or skip certification.
    #[arg(long, global = true)]
    pub trust_external: bool,

    /// Add wall-clock timing to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root system data: Cartan matrix, roots, words, Weyl group.
    Info {
        root_system: String,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// A string cone and its provenance.
    Cone(ConeArgs),
    /// Vertices, facets and lattice points of a string polytope.
    Polytope {
        #[command(flatten)]
        cone: ConeArgs,
        #[command(flatten)]
        weight: WeightArgs,
        /// Include vertex and lattice point lists.
        #[arg(long)]
        list: bool,
    },
    /// Vertex and facet counts of Q(λ) over many reduced words.
    Census {
        root_system: String,
        /// `all` (default), `standard`, or letters; repeat for several words.
        #[arg(long)]
        word: Vec<String>,
        /// Use the standard word and evenly spaced others, this many in total.
        #[arg(long)]
        sample: Option<usize>,
        #[command(flatten)]
        weight: WeightArgs,
        #[command(flatten)]
        provider: ProviderArgs,
    },
    /// The fan over the dominant chamber on which Q(λ) is Minkowski-linear.
    Fan(ConeArgs),
    /// The fiber of Q(λ) over a weight μ.
    Fiber {
        #[command(flatten)]
        cone: ConeArgs,
        #[command(flatten)]
        weight: WeightArgs,
        /// The weight μ, in fundamental coordinates.
        #[arg(long)]
        mu: String,
    },
    /// Integrality and reflexivity of Q(2ρ).
    Anticanonical(ConeArgs),
    /// Integrality of the dilated 16-dimensional E6 suffix polytope nQ'.
    E6 {
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
    /// Compare crystal strings with the lattice points of Q(λ) (type A).
    CrystalCheck {
        #[command(flatten)]
        cone: ConeArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Write a polytope, cone or crystal in an exchange format.
    Emit {
        #[command(flatten)]
        cone: ConeArgs,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = EmitKind::Ieq)]
        kind: EmitKind,
    },
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    /// Cartan type and rank, e.g. `A3`, `C2`, `E6`.
    pub root_system: String,
    /// `standard` or letters such as `1,3,2,3,1,2`.
    #[arg(long, default_value = "standard")]
    pub word: String,
    #[command(flatten)]
    pub provider: ProviderArgs,
}

#[derive(Debug, Args)]
pub struct ProviderArgs {
    #[arg(long, value_enum, default_value_t = ProviderKind::Auto)]
    pub provider: ProviderKind,
    /// STRINGCONE v1 file (implies `--provider external`).
    #[arg(long)]
    pub cone_file: Option<PathBuf>,
    /// Degree bound for empirical cones.
    #[arg(long, default_value_t = 2)]
    pub degree: u32,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// λ in fundamental coordinates, e.g. `1,1` or `1/2,1`.
    #[arg(long, conflicts_with = "partition")]
    pub lambda: Option<String>,
    /// λ as a partition `λ_1 ≥ … ≥ λ_{n+1}` (type A).
    #[arg(long)]
    pub partition: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProviderKind {
    /// Builtin cone when one exists, otherwise empirical (type A).
    Auto,
    Builtin,
    Empirical,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitKind {
    /// PORTA inequalities of Q(λ).
    Ieq,
    /// PORTA vertices of Q(λ).
    Poi,
    /// The string cone as a STRINGCONE v1 file.
    Stringcone,
    /// JSON list of tableaux with their strings (type A).
    Crystal,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit status for a library error.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    if e.downcast_ref::<report::UnsupportedFormat>().is_some() || e.downcast_ref::<config::ConfigError>().is_some() {
        return exit::USAGE;
    }
    match e.downcast_ref::<Error>() {
        Some(
            Error::Parse(_)
            | Error::UnknownType(_)
            | Error::NotReduced(_)
            | Error::NotDominant(_)
            | Error::NotRegular(_)
            | Error::DimMismatch { .. }
            | Error::ProviderMismatch(_)
            | Error::ShapeMismatch(_)
            | Error::ShapeTooTall { .. }
            | Error::ChamberViolation,
        ) => exit::USAGE,
        Some(Error::EmptyPolyhedron) => exit::EMPTY,
        Some(Error::BudgetExceeded { .. } | Error::DimensionOverflow { .. }) => exit::BUDGET,
        Some(Error::CertificationFailed(_)) => exit::CERTIFICATION,
        _ => exit::OTHER,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let text = e.render().to_string();
            return if code == exit::OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    match commands::execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = exit_code(&e);
            let stdout = match format {
                Format::Json => report::error_json(&e, code),
                _ => String::new(),
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {e:#}\n"),
            }
        }
    }
}
