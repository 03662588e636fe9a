//! File formats and commands behind the `rotabaxter` binary.

pub mod commands;
pub mod export;
pub mod file;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::{run, Output};
pub use file::{AlgebraFile, FileError};
pub use report::ReportFile;

#[derive(Debug, Parser)]
#[command(name = "rotabaxter", version, about = "Check and build Rota-Baxter Lie algebra structures")]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a check suite on an algebra file.
    Check { path: PathBuf, which: CheckKind },
    /// Build a new algebra file from an existing one.
    Build {
        path: PathBuf,
        #[command(subcommand)]
        what: BuildKind,
        /// Weight used when the file has no operator block.
        #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
        weight: String,
    },
    /// Floating-point checks on SL(n, C).
    Group {
        #[command(subcommand)]
        what: GroupKind,
    },
    /// Write a catalog entry as an algebra file.
    Export {
        /// Entry name; omit with --list.
        entry: Option<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        weight: String,
        /// Print the entry names.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Jacobi,
    Rb,
    Quadratic,
    Cybe,
    Quasitriangular,
    Bialgebra,
    RbBialgebra,
    MatchedPair,
    RbMatchedPair,
    Manin,
    RbManin,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum BuildKind {
    Descendent,
    DoubleD,
    Bowtie,
    DrinfeldDouble,
    RbFromR,
    RFromRb,
    ManinFromBialgebra,
    BialgebraFromManin,
    /// The k-fold descendent.
    Tower {
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Subcommand)]
pub enum GroupKind {
    CheckRb {
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    Factorize {
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    Differentiate {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
    },
}

#[derive(Clone, Debug, PartialEq, clap::Args)]
pub struct Sampling {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{path}: {source}")]
    File { path: PathBuf, source: FileError },

    #[error("{command} needs the {block:?} block")]
    MissingBlock { command: &'static str, block: &'static str },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] rotabaxter::Error),
}

impl CliError {
    /// 1 when the input is well formed but fails a mathematical
    /// precondition, 2 for unreadable or incomplete input.
    pub fn exit_code(&self) -> u8 {
        use rotabaxter::Error as E;
        match self {
            CliError::Core(E::CheckFailed(_) | E::NotFactorizable | E::DegenerateForm | E::Singular) => 1,
            _ => 2,
        }
    }
}
