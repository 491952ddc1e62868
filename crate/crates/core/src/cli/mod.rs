//! Command-line front end. The `posspan` binary only forwards its arguments
//! to [`main_with_args`].
//!
//! Exit codes: `0` affirmative verdict, `1` negative verdict, `2` usage,
//! parse or parameter error.

mod report;

pub use report::{
    basis_report, basis_report_from, basis_report_json, check_pss_report, decompose_report,
    graph_report, mat_from, mat_json, rats_from, rats_json, summary, verify_report, witness_from,
    witness_json, GraphAction, ReportInput, EXIT_ERROR, EXIT_NO, EXIT_YES, SCHEMA,
};

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::digraph::{
    format_digraph, gen_min_sc_n_plus_1, gen_min_sc_two_n_minus_3, random_min_sc_n_plus_1,
    random_min_sc_two_n_minus_3, read_digraph_file, read_tree_file, DigraphError, TreeSpec,
};
use crate::exact::{parse_rat, read_matrix_file, ExactError, Rat};
use crate::posbasis::{
    gen_maximal_pb, gen_minimal_pb, gen_pb_2l_minus_1, gen_pb_l_plus_2, random_pb_2l_minus_1,
    random_pb_l_plus_2, PosBasisError,
};
use crate::pss::PssError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Pss(#[from] PssError),
    #[error(transparent)]
    PosBasis(#[from] PosBasisError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "posspan",
    version,
    about = "Exact certificates for positive spanning sets, positive bases and strongly connected digraphs"
)]
pub struct Cli {
    /// Print the JSON report instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the main output (generated file, network matrix or report) here.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the columns of a matrix positively span the space.
    CheckPss { file: PathBuf },
    /// IN/INA decomposition with an equivalence witness.
    Decompose { file: PathBuf },
    /// Digraph queries: strong connectivity, ears, cuts, network matrix,
    /// minimality.
    Graph {
        #[arg(value_enum)]
        action: GraphActionArg,
        digraph: PathBuf,
        #[arg(long, value_name = "FILE")]
        tree: Option<PathBuf>,
    },
    /// Decide whether the columns form a positive basis of their span.
    Basis { file: PathBuf },
    /// Emit a member of a positive-basis or digraph family.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphActionArg {
    Check,
    Ears,
    Cut,
    Netmat,
    Minimal,
}

impl From<GraphActionArg> for GraphAction {
    fn from(a: GraphActionArg) -> GraphAction {
        match a {
            GraphActionArg::Check => GraphAction::Check,
            GraphActionArg::Ears => GraphAction::Ears,
            GraphActionArg::Cut => GraphAction::Cut,
            GraphActionArg::Netmat => GraphAction::Netmat,
            GraphActionArg::Minimal => GraphAction::Minimal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "min-pb")]
    MinPb,
    #[value(name = "max-pb")]
    MaxPb,
    #[value(name = "pb-2l-1")]
    Pb2lMinus1,
    #[value(name = "pb-l-2")]
    PbLPlus2,
    #[value(name = "digraph-2n-3")]
    Digraph2nMinus3,
    #[value(name = "digraph-n-1")]
    DigraphNPlus1,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::MinPb => "min-pb",
            Family::MaxPb => "max-pb",
            Family::Pb2lMinus1 => "pb-2l-1",
            Family::PbLPlus2 => "pb-l-2",
            Family::Digraph2nMinus3 => "digraph-2n-3",
            Family::DigraphNPlus1 => "digraph-n-1",
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Number of rows (matrices) or vertices (digraphs).
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension of the spanned subspace (defaults to n).
    #[arg(long)]
    pub ell: Option<usize>,
    /// Height of the first block for `pb-l-2`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated free entries, e.g. `--x=0,-1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Option<Vec<String>>,
    /// Number of 3-circuits for `digraph-2n-3`.
    #[arg(long)]
    pub circuits: Option<usize>,
    /// Length of the shared path for `digraph-n-1`.
    #[arg(long)]
    pub overlap: Option<usize>,
    /// Seed for the free choices.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Result of one command: exit code, JSON report and an optional artifact
/// in one of the text formats.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub artifact: Option<String>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_x(raw: &[String]) -> Result<Vec<Rat>, CliError> {
    raw.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rat(s.trim()).map_err(CliError::from))
        .collect()
}

fn dims(args: &GenerateArgs) -> Result<(usize, usize), CliError> {
    match (args.ell, args.n) {
        (Some(l), Some(n)) => Ok((l, n)),
        (Some(l), None) => Ok((l, l)),
        (None, Some(n)) => Ok((n, n)),
        (None, None) => Err(usage("give --n or --ell")),
    }
}

fn generate(args: &GenerateArgs) -> Result<Outcome, CliError> {
    let mut rng = args.seed.map(ChaCha8Rng::seed_from_u64);
    let explicit_x = args.x.as_deref().map(parse_x).transpose()?;
    let mut params = serde_json::Map::new();
    let artifact_key;
    let (text, cert) = match args.family {
        Family::MinPb | Family::MaxPb | Family::Pb2lMinus1 | Family::PbLPlus2 => {
            let (ell, n) = dims(args)?;
            params.insert("ell".into(), json!(ell));
            params.insert("n".into(), json!(n));
            let m = match args.family {
                Family::MinPb => gen_minimal_pb(ell, n)?,
                Family::MaxPb => gen_maximal_pb(ell, n)?,
                Family::Pb2lMinus1 => {
                    let (m, x) = match (explicit_x, rng.as_mut()) {
                        (Some(x), _) => (gen_pb_2l_minus_1(ell, n, &x)?, x),
                        (None, Some(r)) => random_pb_2l_minus_1(ell, n, r)?,
                        (None, None) if ell == 2 => (gen_pb_2l_minus_1(ell, n, &[])?, vec![]),
                        (None, None) => return Err(usage("pb-2l-1 needs --x or --seed")),
                    };
                    params.insert("x".into(), rats_json(&x));
                    m
                }
                _ => {
                    let (m, k, x) = match (explicit_x, args.k, rng.as_mut()) {
                        (Some(x), Some(k), _) => (gen_pb_l_plus_2(ell, n, k, &x)?, k, x),
                        (Some(x), None, _) => {
                            let k = x.len();
                            (gen_pb_l_plus_2(ell, n, k, &x)?, k, x)
                        }
                        (None, _, Some(r)) => random_pb_l_plus_2(ell, n, r)?,
                        (None, _, None) => return Err(usage("pb-l-2 needs --x or --seed")),
                    };
                    params.insert("k".into(), json!(k));
                    params.insert("x".into(), rats_json(&x));
                    m
                }
            };
            let cert = report::generated_matrix_certificate(&m)
                .ok_or_else(|| usage("generated matrix failed its verifier"))?;
            artifact_key = "matrix";
            (m.to_string(), cert)
        }
        Family::Digraph2nMinus3 | Family::DigraphNPlus1 => {
            let n = args.n.ok_or_else(|| usage("give --n"))?;
            params.insert("n".into(), json!(n));
            let g = if args.family == Family::Digraph2nMinus3 {
                match (args.circuits, rng.as_mut()) {
                    (Some(c), _) => {
                        params.insert("circuits".into(), json!(c));
                        let extra = n.checked_sub(c + 2).ok_or_else(|| {
                            usage(format!("{c} circuits need at least {} vertices", c + 2))
                        })?;
                        let trees: Vec<TreeSpec> = if extra > 0 {
                            vec![TreeSpec::path(0, extra)]
                        } else {
                            vec![]
                        };
                        gen_min_sc_two_n_minus_3(n, c, &trees)?
                    }
                    (None, Some(r)) => random_min_sc_two_n_minus_3(n, r)?,
                    (None, None) => return Err(usage("digraph-2n-3 needs --circuits or --seed")),
                }
            } else {
                match (args.overlap, rng.as_mut()) {
                    (Some(o), rng) => {
                        params.insert("overlap".into(), json!(o));
                        let total = (n + 1).saturating_sub(o);
                        let q1 = match rng {
                            Some(r) if total >= 4 => rand::Rng::gen_range(r, 2..=total - 2),
                            _ => total / 2,
                        };
                        params.insert("q1".into(), json!(q1));
                        gen_min_sc_n_plus_1(n, o, q1)?
                    }
                    (None, Some(r)) => random_min_sc_n_plus_1(n, r)?,
                    (None, None) => return Err(usage("digraph-n-1 needs --overlap or --seed")),
                }
            };
            let cert = report::generated_digraph_certificate(&g)
                .ok_or_else(|| usage("generated digraph failed its verifier"))?;
            artifact_key = "digraph";
            (format_digraph(&g), cert)
        }
    };
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!("generate"));
    m.insert("verdict".into(), json!(true));
    m.insert("family".into(), json!(args.family.name()));
    m.insert("seed".into(), json!(args.seed));
    m.insert("params".into(), Value::Object(params));
    m.insert("certificate".into(), cert);
    m.insert(artifact_key.into(), json!(text));
    Ok(Outcome {
        code: EXIT_YES,
        report: Value::Object(m),
        artifact: Some(text),
    })
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let plain = |(code, report): (i32, Value)| Outcome {
        code,
        report,
        artifact: None,
    };
    Ok(match &cli.command {
        Command::CheckPss { file } => plain(check_pss_report(&read_matrix_file(file)?)),
        Command::Decompose { file } => plain(decompose_report(&read_matrix_file(file)?)?),
        Command::Basis { file } => plain(basis_report(&read_matrix_file(file)?)),
        Command::Graph {
            action,
            digraph,
            tree,
        } => {
            let g = read_digraph_file(digraph)?;
            let t = tree.as_ref().map(|p| read_tree_file(&g, p)).transpose()?;
            let (code, report, artifact) = graph_report(&g, t.as_ref(), (*action).into())?;
            Outcome {
                code,
                report,
                artifact,
            }
        }
        Command::Generate(args) => generate(args)?,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn render(cli: &Cli, outcome: &Outcome) -> String {
    if cli.json {
        let mut s = serde_json::to_string_pretty(&outcome.report).expect("serializable");
        s.push('\n');
        s
    } else {
        summary(&outcome.report)
    }
}

/// Parses `args` (including the program name), runs the command, prints or
/// writes the results and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    let rendered = render(&cli, &outcome);
    let mut stdout = std::io::stdout().lock();
    let result = match (&cli.out, &outcome.artifact) {
        (Some(path), Some(artifact)) => write_file(path, artifact).and_then(|_| {
            stdout
                .write_all(rendered.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }),
        (Some(path), None) => write_file(path, &rendered),
        (None, artifact) => {
            let mut text = rendered;
            if let (Some(a), false) = (artifact, cli.json) {
                text.push_str(a);
            }
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return EXIT_ERROR;
    }
    outcome.code
}
