//! `pptkit`: command-line front end for `ppt-core` and its verification
//! harness.
//!
//! Exit codes: 0 success, 1 property violation in `verify`, 2 parse, I/O or
//! usage error, 3 singular pivot block, 4 size cap exceeded, 5 unknown label
//! or vertex.

pub mod harness;
pub mod sampling;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ppt_core::format::{parse_graph, parse_matrix, write_graph, write_matrix};
use ppt_core::labels::parse_label_list;
use ppt_core::pivot::{ppt, schur_complement, sharp};
use ppt_core::polynomial::{nullity_polynomial_capped, q_polynomial_capped};
use ppt_core::{Error, Field, Label, LabeledMatrix, SimpleGraph};

pub use harness::{HarnessConfig, Report, Suite, SuiteOutcome};

/// Default `--max-size` for `ppt poly`.
pub const DEFAULT_POLY_CAP: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "pptkit",
    version,
    about = "Exact principal pivot transforms, nullity polynomials and local complementation"
)]
pub struct Cli {
    /// Field for matrix entries (overrides the file header) and for verify samples: GF(2), GF(p) or Q.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    /// Seed for verify sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Size cap: |V| for `ppt poly` (default 10), every size bound for `verify`.
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrix operations on a matrix file (`-` reads standard input).
    #[command(subcommand)]
    Ppt(PptCommand),
    /// Graph operations on a graph file (`-` reads standard input).
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run the property suites and print one line per suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum PptCommand {
    /// Principal pivot transform on the pivot set.
    Apply {
        file: PathBuf,
        /// Comma-separated pivot labels; `""` is the empty set.
        #[arg(long)]
        pivot: String,
    },
    /// Schur complement of the pivot block.
    Schur {
        file: PathBuf,
        #[arg(long)]
        pivot: String,
    },
    /// Identity with the pivot rows replaced by those of the matrix.
    Sharp {
        file: PathBuf,
        #[arg(long)]
        pivot: String,
    },
    /// Nullity polynomial `p` or diagonal polynomial `q`.
    Poly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::P)]
        which: Which,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    P,
    Q,
}

#[derive(Debug, Subcommand)]
pub enum GraphCommand {
    /// Local complementation at each listed vertex, in order.
    Lc {
        file: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Cut-rank of a vertex set.
    Cutrank {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Adjacency matrix over GF(2).
    Adj { file: PathBuf },
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Comma-separated suites; `all` adds the opt-in suites to the defaults.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
    /// Random samples per suite and field.
    #[arg(long)]
    pub samples: Option<usize>,
    /// List the suites and exit.
    #[arg(long)]
    pub list: bool,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PivotSingular { .. } => 3,
        Error::SizeCapExceeded { .. } => 4,
        Error::LabelNotFound(_) => 5,
        _ => 2,
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let result = if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path, field: Option<Field>) -> Result<LabeledMatrix, Failure> {
    let text = read_input(path)?;
    parse_matrix(&text, field).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    let text = read_input(path)?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Ordered, possibly repeating, comma-separated labels.
fn label_sequence(s: &str) -> Result<Vec<Label>, Failure> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| Label::new(t).map_err(Failure::from))
        .collect()
}

/// Runs one parsed command, returning its standard output.
pub fn execute(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Ppt(cmd) => run_ppt(cli, cmd),
        Command::Graph(cmd) => run_graph(cmd),
        Command::Verify(args) => run_verify(cli, args),
    }
}

fn run_ppt(cli: &Cli, cmd: &PptCommand) -> Result<String, Failure> {
    match cmd {
        PptCommand::Apply { file, pivot }
        | PptCommand::Schur { file, pivot }
        | PptCommand::Sharp { file, pivot } => {
            let a = load_matrix(file, cli.field)?;
            let z = parse_label_list(pivot)?;
            let result = match cmd {
                PptCommand::Apply { .. } => ppt(&a, &z)?,
                PptCommand::Schur { .. } => schur_complement(&a, &z)?,
                _ => sharp(&a, &z)?,
            };
            Ok(write_matrix(&result))
        }
        PptCommand::Poly { file, which } => {
            let a = load_matrix(file, cli.field)?;
            let cap = cli.max_size.unwrap_or(DEFAULT_POLY_CAP);
            let poly = match which {
                Which::P => nullity_polynomial_capped(&a, cap)?,
                Which::Q => q_polynomial_capped(&a, cap)?,
            };
            Ok(format!("{poly}\n{}\n", poly.coefficient_line()))
        }
    }
}

fn run_graph(cmd: &GraphCommand) -> Result<String, Failure> {
    match cmd {
        GraphCommand::Lc { file, at } => {
            let g = load_graph(file)?;
            Ok(write_graph(&g.apply_lc_sequence(&label_sequence(at)?)?))
        }
        GraphCommand::Cutrank { file, set } => {
            let g = load_graph(file)?;
            Ok(format!("{}\n", g.cut_rank(&parse_label_list(set)?)?))
        }
        GraphCommand::Adj { file } => Ok(write_matrix(&load_graph(file)?.adjacency_matrix())),
    }
}

/// Builds the harness config from the command line.
pub fn harness_config(cli: &Cli, args: &VerifyArgs) -> Result<HarnessConfig, Failure> {
    let mut config = HarnessConfig::default();
    if let Some(field) = cli.field {
        config.fields = vec![field];
    }
    config.seed = cli.seed.unwrap_or(config.seed);
    config.max_size = cli.max_size;
    config.samples = args.samples;
    if !args.suite.is_empty() {
        let mut suites = Vec::new();
        for name in &args.suite {
            match name.as_str() {
                "all" => suites.extend(Suite::ALL),
                "default" => suites.extend(Suite::defaults()),
                _ => suites.push(
                    Suite::from_name(name)
                        .ok_or_else(|| Failure::usage(format!("unknown suite `{name}`")))?,
                ),
            }
        }
        config.suites = suites;
    }
    Ok(config)
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<String, Failure> {
    if args.list {
        let defaults = Suite::defaults();
        return Ok(Suite::ALL
            .iter()
            .map(|s| {
                if defaults.contains(s) {
                    format!("{s}\n")
                } else {
                    format!("{s} (opt-in)\n")
                }
            })
            .collect());
    }
    let report = harness::run(&harness_config(cli, args)?);
    let text = report.to_string();
    if report.all_passed() {
        Ok(text)
    } else {
        Err(Failure {
            code: 1,
            message: text,
        })
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        // A failing verify report still goes to standard output.
        Err(Failure { code: 1, message }) => {
            let _ = out.write_all(message.as_bytes());
            1
        }
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}
