//! Command-line front end: argument schema, dispatch, text and JSON rendering.

mod commands;
mod render;
pub mod tables;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;

pub use render::parse_rational;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coxtrans", version, about = "Exact Coxeter transformations of valued graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// ASCII-only output (no λ, −, ·, Φ).
    #[arg(long, global = true)]
    pub ascii: bool,
    /// Isolation width for real roots: a fraction (`1/1000000`) or a decimal (`1e-12`).
    #[arg(long, global = true)]
    pub tol: Option<String>,
    /// Read the diagram from a graph DSL file instead of a catalog name.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct DiagramArg {
    /// Catalog name (E6, D4~, T[2,3,7], A[5]~k=2, star5, ...).
    pub diagram: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial of the Coxeter transformation.
    Charpoly {
        #[command(flatten)]
        d: DiagramArg,
        #[arg(long)]
        orientation: Option<String>,
        /// Also print the cyclotomic factorization.
        #[arg(long)]
        factor: bool,
    },
    /// Eigenvalues of C and of DF.
    Spectrum {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Jordan form at eigenvalue 1.
    Jordan {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Coxeter numbers, exponents and the Poincaré polynomial.
    Numbers {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Root enumeration (Dynkin) or the r·l·h check (extended).
    Roots {
        #[command(flatten)]
        d: DiagramArg,
        /// List every positive root.
        #[arg(long)]
        list: bool,
    },
    /// Defect form of an extended diagram.
    Defect {
        #[command(flatten)]
        d: DiagramArg,
        #[arg(long, default_value = "bicolored")]
        orientation: String,
        /// Compute the fixed vector of the adjoint Coxeter action instead.
        #[arg(long)]
        fixed: bool,
    },
    /// Regularity of a dimension vector.
    Regular {
        #[command(flatten)]
        d: DiagramArg,
        /// Comma list in vertex order, or `name=value` pairs.
        #[arg(long, short = 'z', allow_hyphen_values = true)]
        vector: String,
        #[arg(long, default_value = "bicolored")]
        orientation: String,
        #[arg(long, default_value_t = 50)]
        k_max: u32,
    },
    /// Poincaré series of a group (Molien, K-K-GV, Kostant, Ebeling) or the Ebeling quotient of a Dynkin diagram.
    Poincare {
        /// Group (Z5, BD3, T, O, J) or Dynkin name.
        name: String,
        #[arg(long, default_value_t = 24)]
        truncate: usize,
    },
    /// McKay matrix of a binary polyhedral group.
    Mckay {
        group: String,
        /// Index of the faithful 2-dimensional irreducible (default: the natural representation).
        #[arg(long)]
        faithful: Option<usize>,
        /// Also print the character table.
        #[arg(long)]
        characters: bool,
    },
    /// Slodowy matrices of a pair H ◁ G, written `H<G`.
    Slodowy {
        #[arg(default_value = "T<O")]
        pair: String,
    },
    /// Orbit of the Coxeter transformation on the highest root.
    Orbit {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// T_{p,q,r} series polynomials and spectral radii.
    Series {
        /// T23, T33 or T24.
        family: String,
        #[arg(long)]
        r: usize,
        /// Print the spectral radius.
        #[arg(long)]
        radius: bool,
    },
    /// Regenerate every golden table and diff against the committed copies.
    Tables {
        /// Golden directory.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Overwrite the goldens instead of comparing.
        #[arg(long)]
        bless: bool,
        /// Only this table.
        #[arg(long)]
        only: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Rendered command output.
pub(crate) struct Output {
    pub text: String,
    pub json: Value,
    /// Nonzero status without an error (e.g. golden mismatch).
    pub status: i32,
}

impl Output {
    pub fn new(text: String, json: Value) -> Self {
        Output { text, json, status: 0 }
    }
}

pub(crate) enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Charpoly { .. } => "charpoly",
        Command::Spectrum { .. } => "spectrum",
        Command::Jordan { .. } => "jordan",
        Command::Numbers { .. } => "numbers",
        Command::Roots { .. } => "roots",
        Command::Defect { .. } => "defect",
        Command::Regular { .. } => "regular",
        Command::Poincare { .. } => "poincare",
        Command::Mckay { .. } => "mckay",
        Command::Slodowy { .. } => "slodowy",
        Command::Orbit { .. } => "orbit",
        Command::Series { .. } => "series",
        Command::Tables { .. } => "tables",
    }
}

fn with_newline(mut s: String) -> String {
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Pretty JSON with sorted keys; reparsing and re-rendering gives the same bytes.
pub fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { status: 0, stdout: e.to_string(), stderr: String::new() }
                }
                _ => Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: format!("{}error[E_USAGE]: invalid arguments\n", with_newline(e.to_string())),
                },
            };
        }
    };
    let name = command_name(&cli.command);
    let format = cli.global.format;
    match commands::dispatch(&cli.global, &cli.command) {
        Ok(out) => {
            let stdout = match format {
                Format::Text => with_newline(out.text),
                Format::Json => render_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": name,
                    "result": out.json,
                })),
            };
            Outcome { status: out.status, stdout, stderr: String::new() }
        }
        Err(f) => {
            let (status, code, message) = match f {
                Failure::Usage(m) => (2, "E_USAGE", m),
                Failure::Domain(e) => (1, e.code(), e.to_string()),
            };
            let stdout = match format {
                Format::Json => render_json(&json!({
                    "schema": SCHEMA_VERSION,
                    "command": name,
                    "error": { "code": code, "message": message },
                })),
                Format::Text => String::new(),
            };
            Outcome { status, stdout, stderr: format!("error[{code}]: {}\n", message.replace('\n', " ")) }
        }
    }
}
