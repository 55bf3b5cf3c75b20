//! Command-line front end. [`main`] parses arguments, dispatches, and maps
//! errors onto exit codes.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::connectivity::{analyze, is_connected, oracle_report, ConnectivityReport};
use crate::degseq::{is_realizable, DegreeSequence, PowerLawSpec};
use crate::engine::{run, run_experiment, DegreeSource, ExperimentConfig, ExperimentRow, RunConfig, TraceRow};
use crate::error::Error;
use crate::graph::Graph;
use crate::heuristics::{HeuristicConfig, DEFAULT_ALPHA, DEFAULT_CAP, DEFAULT_Q_PLUS};
use crate::metrics::MetricKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INPUT: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "esmc", version, about = "Random connected graphs with a given degree sequence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Run repeated generations over a grid of power-law exponents.
    Experiment(ExperimentArgs),
    /// Print the disconnection census of an edge list.
    Rho(RhoArgs),
    /// Check whether a degree sequence has a connected realization.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeuristicKind {
    Gmz,
    Vl,
    Sb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Clustering,
    Distance,
}

impl From<MetricArg> for MetricKind {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Clustering => MetricKind::Clustering,
            MetricArg::Distance => MetricKind::AverageDistance,
        }
    }
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long, value_enum, default_value = "sb")]
    pub heuristic: HeuristicKind,
    #[arg(long, default_value_t = DEFAULT_Q_PLUS)]
    pub q_plus: f64,
    /// Defaults to q_plus / (e - 1).
    #[arg(long)]
    pub q_minus: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "clustering")]
    pub metric: MetricArg,
    /// Halting window; defaults to 60 for clustering, 30 for distance.
    #[arg(long)]
    pub delta: Option<usize>,
    /// Halting tolerance; defaults to 1e-4 for clustering, 1e-3 for distance.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Upper bound W on switch attempts per transition.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = crate::engine::DEFAULT_MAX_TRANSITIONS)]
    pub max_transitions: u64,
    /// Treat rho as 1 - mu_b (bridges only).
    #[arg(long)]
    pub ignore_pair_cuts: bool,
}

impl ChainArgs {
    fn heuristic_config(&self, kind: HeuristicKind) -> HeuristicConfig {
        match kind {
            HeuristicKind::Gmz => HeuristicConfig::Gmz,
            HeuristicKind::Vl => HeuristicConfig::Vl {
                q_plus: self.q_plus,
                q_minus: self.q_minus,
            },
            HeuristicKind::Sb => HeuristicConfig::Sb { alpha: self.alpha },
        }
    }

    fn run_config(&self, source: DegreeSource, kind: HeuristicKind) -> RunConfig {
        let metric = MetricKind::from(self.metric);
        let mut cfg = RunConfig::new(source, metric);
        cfg.heuristic = self.heuristic_config(kind);
        cfg.cap = self.cap;
        if let Some(d) = self.delta {
            cfg.delta = d;
        }
        if let Some(g) = self.gamma {
            cfg.gamma = g;
        }
        cfg.seed = self.seed;
        cfg.max_transitions = self.max_transitions;
        cfg.ignore_pair_cuts = self.ignore_pair_cuts;
        cfg
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, requires = "tau", conflicts_with = "degrees")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub tau: Option<f64>,
    /// File of whitespace-separated degrees.
    #[arg(long, required_unless_present = "n")]
    pub degrees: Option<PathBuf>,
    #[command(flatten)]
    pub chain: ChainArgs,
    /// Edge-list output; standard output when absent (the summary then
    /// goes to standard error).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-transition CSV trace.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub tau_from: f64,
    #[arg(long)]
    pub tau_to: f64,
    #[arg(long, default_value_t = 0.1)]
    pub tau_step: f64,
    #[arg(long, default_value_t = 600)]
    pub runs: usize,
    /// Comma-separated heuristics; one set of rows each.
    #[arg(long = "heuristics", value_enum, value_delimiter = ',', default_value = "gmz,vl,sb")]
    pub heuristics: Vec<HeuristicKind>,
    #[command(flatten)]
    pub chain: ChainArgs,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Write 0 in the time column so the file depends only on the inputs.
    #[arg(long)]
    pub no_time: bool,
    /// CSV output; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Cross-check against brute force (small graphs only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub ignore_pair_cuts: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub degrees: PathBuf,
}

/// A failure together with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotRealizable(_) | Error::AttemptCapExceeded { .. } | Error::Disconnected | Error::NoCycle => {
            EXIT_DOMAIN
        }
        Error::Io(_)
        | Error::Parse { .. }
        | Error::EmptySequence
        | Error::NegativeDegree { .. }
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::NodeOutOfRange { .. } => EXIT_INPUT,
        _ => EXIT_USAGE,
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::new(exit_code(&err), err.to_string())
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn read_degrees(path: &Path) -> Result<DegreeSequence, Failure> {
    DegreeSequence::read_from(open(path)?).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn io_failure(e: io::Error) -> Failure {
    Failure::new(EXIT_USAGE, e.to_string())
}

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let source = match (&args.degrees, args.n, args.tau) {
        (Some(path), _, _) => DegreeSource::Explicit(read_degrees(path)?),
        (None, Some(n), Some(tau)) => DegreeSource::PowerLaw(PowerLawSpec::new(tau, n)?),
        _ => return Err(Failure::new(EXIT_USAGE, "give --degrees or both --n and --tau")),
    };
    let mut cfg = args.chain.run_config(source, args.chain.heuristic);
    cfg.record_trace = args.trace.is_some();
    let outcome = run(&cfg)?;

    if let Some(path) = &args.trace {
        let mut w = create(path)?;
        writeln!(w, "{}", TraceRow::CSV_HEADER).map_err(io_failure)?;
        for row in &outcome.stats.trace {
            writeln!(w, "{}", row.to_csv()).map_err(io_failure)?;
        }
        w.flush().map_err(io_failure)?;
    }
    let summary = format!("heuristic={} {}", cfg.heuristic, outcome.stats.summary());
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            outcome.graph.write_edge_list(&mut w)?;
            w.flush().map_err(io_failure)?;
            writeln!(out, "{summary}").map_err(io_failure)?;
        }
        None => {
            outcome.graph.write_edge_list(&mut *out)?;
            eprintln!("{summary}");
        }
    }
    Ok(())
}

/// `from, from + step, ...` up to `to` inclusive (with rounding slack).
pub fn tau_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(step > 0.0) || !from.is_finite() || !to.is_finite() || to < from {
        return Err(Failure::new(EXIT_USAGE, "empty tau grid"));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| from + step * i as f64).collect())
}

pub fn cmd_experiment(args: &ExperimentArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let grid = tau_grid(args.tau_from, args.tau_to, args.tau_step)?;
    if args.runs == 0 {
        return Err(Failure::new(EXIT_USAGE, "--runs must be at least 1"));
    }
    if args.heuristics.is_empty() {
        return Err(Failure::new(EXIT_USAGE, "no heuristic selected"));
    }
    let mut rows = Vec::new();
    for &kind in &args.heuristics {
        for &tau in &grid {
            let spec = PowerLawSpec::new(tau, args.n)?;
            let base = args.chain.run_config(DegreeSource::PowerLaw(spec), kind);
            let summary = run_experiment(&ExperimentConfig {
                base: base.clone(),
                runs: args.runs,
                threads: args.threads,
            })?;
            rows.push(ExperimentRow {
                tau: Some(tau),
                heuristic: base.heuristic,
                metric: base.metric,
                summary,
            });
        }
    }

    let mut text = String::new();
    text.push_str(ExperimentRow::CSV_HEADER);
    text.push('\n');
    for row in &rows {
        text.push_str(&row.to_csv(!args.no_time));
        text.push('\n');
    }
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            w.write_all(text.as_bytes()).map_err(io_failure)?;
            w.flush().map_err(io_failure)?;
        }
        None => out.write_all(text.as_bytes()).map_err(io_failure)?,
    }
    Ok(())
}

/// Prints the census; with `oracle`, also the brute-force record and the
/// verdict. Returns the exit code.
pub fn cmd_rho(args: &RhoArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let graph = Graph::read_edge_list(open(&args.input)?)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", args.input.display())))?;
    let report = analyze(&graph, args.ignore_pair_cuts);
    writeln!(out, "{}", report.to_json()).map_err(io_failure)?;
    if !args.oracle {
        return Ok(EXIT_OK);
    }
    let reference = if is_connected(&graph) {
        let mut r = oracle_report(&graph)?.report;
        if args.ignore_pair_cuts {
            r.pair_cuts = None;
        }
        r
    } else {
        ConnectivityReport::disconnected(graph.m())
    };
    writeln!(out, "{}", reference.to_json()).map_err(io_failure)?;
    if reference == report {
        writeln!(out, "MATCH").map_err(io_failure)?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "MISMATCH").map_err(io_failure)?;
        Ok(EXIT_MISMATCH)
    }
}

pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let seq = read_degrees(&args.degrees)?;
    let verdict = is_realizable(&seq);
    writeln!(out, "{verdict}").map_err(io_failure)?;
    Ok(if verdict.is_realizable() { EXIT_OK } else { EXIT_DOMAIN })
}

/// Runs the tool on `argv` and returns the process exit code.
pub fn main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Generate(a) => cmd_generate(a, &mut out).map(|_| EXIT_OK),
        Command::Experiment(a) => cmd_experiment(a, &mut out).map(|_| EXIT_OK),
        Command::Rho(a) => cmd_rho(a, &mut out),
        Command::Check(a) => cmd_check(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
