//! The `eqslice` command line.
//!
//! Exit codes: 0 success or Slice, 1 internal failure, 2 bad input (parse
//! error, unknown file, ambient or flag), 3 state-sum limit exceeded, 4 input
//! not in axis-normal form, 5 tree or plumbing validation failure,
//! 10 NotSlice, 11 Inconclusive or no unknotting sequence found.

mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::certify::{CertifyError, Convention};
use crate::eqtree::{TreeError, TreeViolation};
use crate::invariants::InvariantError;
use crate::linkdiag::DiagramError;
use crate::plumbing::{PlumbingError, PlumbingViolation};
use crate::symdiag::{HalfAxis, SymError};
use crate::IntersectionType;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_NOT_AXIS_NORMAL: i32 = 4;
pub const EXIT_INVALID: i32 = 5;
pub const EXIT_NOT_SLICE: i32 = 10;
pub const EXIT_INCONCLUSIVE: i32 = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "eqslice", version, about = "Strongly invertible knots, equivariant trees and sliceness certificates")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Jones polynomial, determinant, signature, Arf invariant and unknot status.
    Invariants { file: String },
    /// The quotient knot along a half-axis.
    Quotient {
        file: String,
        #[arg(value_parser = parse_half_axis)]
        half_axis: HalfAxis,
        /// Write the quotient PD code here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Type of every symmetric crossing-change site.
    Classify { file: String },
    /// Shortest equivariant unknotting sequence.
    UnknotSearch {
        file: String,
        #[arg(long, default_value_t = 4)]
        max_moves: usize,
        /// Comma-separated types, e.g. `A,B+`.
        #[arg(long, value_delimiter = ',', default_values_t = IntersectionType::ALL.to_vec())]
        allow: Vec<IntersectionType>,
    },
    /// Equivariant tree operations.
    Tree {
        #[command(subcommand)]
        op: TreeOp,
    },
    /// Validate a plumbing file or builtin and print it.
    Plumbing { spec: String },
    /// Decide sliceness in an ambient manifold: certificate or obstruction.
    Certify {
        file: String,
        ambient: String,
        #[arg(long, default_value_t = Convention::default(), value_parser = parse_convention)]
        convention: Convention,
        /// Most symmetric crossing changes tried by the search.
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreeOp {
    /// Check the bipartition and, for equivariant trees, conditions 1 to 4.
    Validate { file: String },
    /// The associated link, strongly invertible for equivariant trees.
    Assoc { file: String },
    /// Remove pairs of A leaves down to `k` vertices.
    Prune { file: String, k: usize },
    /// The tree embedded in a plumbing (file or builtin name).
    Derive { plumbing: String },
}

fn parse_half_axis(s: &str) -> Result<HalfAxis, String> {
    s.parse()
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Limit(InvariantError),
    #[error(transparent)]
    NotAxisNormal(SymError),
    #[error("{}", tree_violations(.0))]
    InvalidTree(Vec<TreeViolation>),
    #[error("invalid plumbing:\n{}", lines(.0))]
    InvalidPlumbing(Vec<PlumbingViolation>),
    #[error("{0}")]
    Internal(String),
}

fn lines<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| format!("  {}", x.to_string())).collect::<Vec<_>>().join("\n")
}

fn tree_violations(v: &[TreeViolation]) -> String {
    let mut conditions: Vec<u8> = v.iter().map(|x| x.condition).collect();
    conditions.dedup();
    let list: Vec<String> = conditions.iter().map(u8::to_string).collect();
    format!("tree fails condition {}:\n{}", list.join(", "), lines(v))
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => EXIT_INPUT,
            CliError::Limit(_) => EXIT_LIMIT,
            CliError::NotAxisNormal(_) => EXIT_NOT_AXIS_NORMAL,
            CliError::InvalidTree(_) | CliError::InvalidPlumbing(_) => EXIT_INVALID,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SymError> for CliError {
    fn from(e: SymError) -> Self {
        match e {
            SymError::NotAxisNormal(_) => CliError::NotAxisNormal(e),
            SymError::TypeMismatch { .. } | SymError::BadSite(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::LimitExceeded { .. } => CliError::Limit(e),
            InvariantError::NotAKnot(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::Invalid(v) => CliError::InvalidTree(v),
            TreeError::Parse { .. } | TreeError::EvenSize(_) | TreeError::OutOfRange { .. } | TreeError::NotEquivariant => {
                CliError::Input(e.to_string())
            }
            TreeError::Stuck(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<PlumbingError> for CliError {
    fn from(e: PlumbingError) -> Self {
        match e {
            PlumbingError::Invalid(v) => CliError::InvalidPlumbing(v),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::Sym(e) => e.into(),
            CertifyError::Invariant(e) => e.into(),
            CertifyError::Database { .. } => CliError::Input(e.to_string()),
            CertifyError::Conflict { .. } => CliError::Internal(e.to_string()),
        }
    }
}

/// What a command produced, in every format it supports.
pub struct Output {
    pub text: String,
    pub json: Vec<serde_json::Value>,
    pub dot: Option<String>,
    pub code: i32,
}

impl Output {
    fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::JsonLines => Ok(self.json.iter().map(|v| format!("{v}\n")).collect()),
            Format::Dot => self.dot.clone().ok_or_else(|| CliError::Input("this command has no dot output".into())),
        }
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match commands::execute(&cli.command).and_then(|o| Ok((o.render(cli.format)?, o.code))) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
