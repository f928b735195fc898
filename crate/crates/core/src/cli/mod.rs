//! The `bchrom` command line: `analyze`, `color`, `verify` and `generate`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 refusal
//! (girth precondition or oracle limit), 4 internal invariant violation.

mod coloring_file;
mod record;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

pub use coloring_file::{parse_coloring, write_coloring, ColoringFile};
pub use record::{AnalysisRecord, ChiB, LabeledViolation, VerifyRecord};

use crate::bcolor::CONSTRUCTION_GIRTH;
use crate::error::Error;
use crate::graph::{generate_girth_constrained, girth, write_edge_list, Format, Graph};
use crate::oracle::{check_b_coloring, OracleConfig, DEFAULT_ORACLE_LIMIT};
use crate::pipeline::{analyze_structure, b_chromatic, Method, Outcome, PipelineConfig};
use crate::Vertex;

#[derive(Debug, Parser)]
#[command(
    name = "bchrom",
    version,
    about = "b-chromatic number of graphs with girth at least 9"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report girth, m, the dense vertices and good-set existence.
    Analyze(AnalyzeArgs),
    /// Write a b-coloring with the maximum number of colors.
    Color(ColorArgs),
    /// Check a coloring file against a graph.
    Verify(VerifyArgs),
    /// Write a random graph with a girth lower bound.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Input format; by default `.col`/`.dimacs` files are DIMACS and
    /// everything else is an edge list.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Largest vertex count the exhaustive search accepts.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(required_unless_present = "batch", conflicts_with = "batch")]
    input: Option<PathBuf>,
    /// Analyze every file in a directory, in parallel.
    #[arg(long, conflicts_with = "trace")]
    batch: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphInput,
    /// Also determine the b-chromatic number.
    #[arg(long)]
    chi_b: bool,
    /// With --chi-b, refuse (exit 3) unless the value comes with a witness.
    #[arg(long, requires = "chi_b")]
    oracle: bool,
    #[command(flatten)]
    limits: OracleArgs,
    /// Print the construction steps to stderr.
    #[arg(long, requires = "chi_b")]
    trace: bool,
    /// Emit one JSON object instead of key=value lines.
    #[arg(long)]
    json: bool,
    /// Check whether these vertices (comma-separated labels) form a good set.
    #[arg(long, value_delimiter = ',')]
    candidate: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
struct ColorArgs {
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphInput,
    /// Allow exhaustive search on graphs of girth below 9.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    limits: OracleArgs,
    /// Print the construction steps to stderr.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    #[command(flatten)]
    format: GraphInput,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 9)]
    min_girth: usize,
    /// Edge budget; defaults to `n`.
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// A command failure and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Verification,
    Input(String),
    Refusal(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Verification => 1,
            Failure::Input(_) => 2,
            Failure::Refusal(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> Option<&str> {
        match self {
            Failure::Verification => None,
            Failure::Input(m) | Failure::Refusal(m) | Failure::Internal(m) => Some(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GirthPrecondition { .. } | Error::OracleLimit { .. } => Failure::Refusal(e.to_string()),
            Error::InvariantViolation { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the command line on `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(a, out, err),
        Command::Color(a) => color(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Generate(a) => generate(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(failure) => {
            if let Some(message) = failure.message() {
                let _ = writeln!(err, "bchrom: {message}");
            }
            failure.code()
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path, format: Option<Format>) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let format = format.unwrap_or_else(|| Format::from_path(path));
    format
        .parse(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Input(format!("writing output: {e}")))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> CmdResult {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => emit(out, text),
    }
}

fn pipeline_config(limits: &OracleArgs) -> PipelineConfig {
    PipelineConfig {
        oracle: OracleConfig {
            limit: limits.oracle_limit,
            ..OracleConfig::default()
        },
    }
}

fn print_trace(g: &Graph, outcome: &Outcome, err: &mut dyn Write) {
    match &outcome.construction {
        Some(c) => {
            for event in c.trace() {
                let _ = writeln!(err, "{}", event.render(g));
            }
        }
        None => {
            let _ = writeln!(err, "# no construction trace (method={})", outcome.method.tag());
        }
    }
}

fn candidate_ids(g: &Graph, labels: &[u64]) -> Result<Vec<Vertex>, Failure> {
    let mut ids = labels
        .iter()
        .map(|&l| {
            g.vertex_of_label(l)
                .ok_or_else(|| Failure::Input(format!("candidate vertex {l} is not in the graph")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn analyze_graph(g: &Graph, args: &AnalyzeArgs, err: Option<&mut dyn Write>) -> Result<AnalysisRecord, Failure> {
    let outcome = if args.chi_b {
        b_chromatic(g, pipeline_config(&args.limits))?
    } else {
        analyze_structure(g)?
    };
    if let Some(err) = err {
        if args.trace {
            print_trace(g, &outcome, err);
        }
    }
    let mut record = AnalysisRecord::new(g, &outcome, args.chi_b);
    if let Some(labels) = &args.candidate {
        record.judge_candidate(g, &outcome, &candidate_ids(g, labels)?);
    }
    if args.oracle && outcome.coloring.is_none() {
        return Err(Failure::Refusal(format!(
            "no witnessed value: method {} on {} vertices (oracle limit {})",
            outcome.method.tag(),
            g.n(),
            args.limits.oracle_limit
        )));
    }
    Ok(record)
}

fn render(record: &AnalysisRecord, json: bool) -> String {
    if json {
        serde_json::to_string(record).unwrap() + "\n"
    } else {
        record.to_text()
    }
}

fn analyze(args: AnalyzeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if let Some(dir) = &args.batch {
        return analyze_batch(dir, &args, out);
    }
    let path = args.input.as_deref().unwrap();
    let g = load_graph(path, args.graph.format)?;
    let record = analyze_graph(&g, &args, Some(err))?;
    emit(out, &render(&record, args.json))
}

fn analyze_batch(dir: &Path, args: &AnalyzeArgs, out: &mut dyn Write) -> CmdResult {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| io_failure(dir, e))? {
        let entry = entry.map_err(|e| io_failure(dir, e))?;
        if entry.file_type().map_err(|e| io_failure(dir, e))?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();

    let results: Vec<Result<AnalysisRecord, Failure>> = files
        .par_iter()
        .map(|path| {
            let g = load_graph(path, args.graph.format)?;
            analyze_graph(&g, args, None)
        })
        .collect();

    let mut worst = 0;
    let mut text = String::new();
    for (path, result) in files.iter().zip(results) {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        match result {
            Ok(mut record) => {
                record.file = Some(name);
                if !args.json && !text.is_empty() {
                    text.push('\n');
                }
                text += &render(&record, args.json);
            }
            Err(failure) => {
                worst = worst.max(failure.code());
                let message = failure.message().unwrap_or_default();
                if args.json {
                    text += &serde_json::json!({ "file": name, "error": message }).to_string();
                    text.push('\n');
                } else {
                    if !text.is_empty() {
                        text.push('\n');
                    }
                    text += &format!("file={name}\nerror={message}\n");
                }
            }
        }
    }
    emit(out, &text)?;
    match worst {
        0 => Ok(()),
        2 => Err(Failure::Input("some files could not be analyzed".into())),
        3 => Err(Failure::Refusal("some files were refused".into())),
        _ => Err(Failure::Internal("internal error on some files".into())),
    }
}

fn color(args: ColorArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = load_graph(&args.input, args.graph.format)?;
    let limit = args.limits.oracle_limit;
    let girth = girth(&g);
    if !girth.is_at_least(CONSTRUCTION_GIRTH) {
        if !args.oracle {
            return Err(Failure::Refusal(format!(
                "the construction requires girth at least {CONSTRUCTION_GIRTH}, graph has girth {girth}; \
                 pass --oracle to use exhaustive search"
            )));
        }
        if g.n() > limit {
            return Err(Error::OracleLimit { n: g.n(), limit }.into());
        }
    }

    let outcome = b_chromatic(&g, pipeline_config(&args.limits))?;
    if args.trace {
        print_trace(&g, &outcome, err);
    }
    let Some(result) = &outcome.coloring else {
        let detail = match outcome.method {
            Method::NoGoodSetTheorem => format!(
                "no good set, so the b-chromatic number is {}, but a witness needs exhaustive search",
                outcome.profile.m - 1
            ),
            _ => "no method applies".to_string(),
        };
        return Err(Failure::Refusal(format!(
            "{detail}; graph has {} vertices and the oracle limit is {limit}",
            g.n()
        )));
    };
    write_output(args.output.as_deref(), &write_coloring(&g, result), out)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let g = load_graph(&args.graph, args.format.format)?;
    let text = std::fs::read_to_string(&args.coloring).map_err(|e| io_failure(&args.coloring, e))?;
    let file = parse_coloring(&g, &text).map_err(|e| Failure::Input(format!("{}: {e}", args.coloring.display())))?;
    let report = check_b_coloring(&g, &file.colors, file.k)?;
    let record = VerifyRecord::new(&g, &report, file.k, &file.basis, &file.colors);
    let rendered = if args.json {
        serde_json::to_string(&record).unwrap() + "\n"
    } else {
        record.to_text()
    };
    emit(out, &rendered)?;
    if record.valid {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn generate(args: GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let g = generate_girth_constrained(args.n, args.min_girth, args.edges.unwrap_or(args.n), args.seed)?;
    write_output(args.output.as_deref(), &write_edge_list(&g), out)
}
