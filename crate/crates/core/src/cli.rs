//! The `meg` command line.
//!
//! Exit codes: 0 on success, 1 when a decision query (`solve --budget`,
//! `verify`) answers NO, 2 on any input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::approx::{approx_meg, approx_ratio_bound};
use crate::error::MegError;
use crate::generators::{generate, random_interval_model, Family, GenSpec};
use crate::graph::{Graph, Vertex};
use crate::interval::{interval_min_meg, is_mandatory_interval, IntervalModel};
use crate::io::{parse_edge_list, parse_intervals, write_edge_list, write_intervals};
use crate::monitor::{
    is_meg_set, mandatory_oracle, mandatory_vertices, min_meg_exact, MegResult, EXACT_MAX_VERTICES,
};
use crate::reductions::vc_gadget;
use crate::report::{bench_csv, BenchRow, Decision, Instance, Report};

#[derive(Parser, Debug)]
#[command(name = "meg", version, about = "Minimum monitoring edge-geodetic sets")]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Record wall-clock times (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum MEG-set by exhaustive search or the interval-graph algorithm.
    Solve(SolveArgs),
    /// Greedy set-cover approximation.
    Approx(ApproxArgs),
    /// Check whether a vertex set is an MEG-set.
    Verify(VerifyArgs),
    /// Vertices contained in every MEG-set.
    Mandatory(MandatoryArgs),
    /// Emit the vertex-cover hardness gadget of a graph.
    Gadget(GadgetArgs),
    /// Generate an instance.
    Gen(GenArgs),
    /// Run every solver over a directory of instances and write CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["exact", "interval", "budget"])))]
struct SolveArgs {
    /// Edge-list file, or an interval file with `--interval`.
    input: PathBuf,
    #[arg(long)]
    exact: bool,
    /// Treat the input as an interval model.
    #[arg(long)]
    interval: bool,
    /// Decide whether an MEG-set of at most this size exists.
    #[arg(long, value_name = "K")]
    budget: Option<usize>,
    /// Edge list the interval model must induce.
    #[arg(long, requires = "interval")]
    graph: Option<PathBuf>,
    #[arg(long)]
    witnesses: bool,
}

#[derive(Args, Debug)]
struct ApproxArgs {
    input: PathBuf,
    /// Compute the optimum exactly and report the size bound it implies.
    #[arg(long)]
    certify: bool,
    #[arg(long)]
    witnesses: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    input: PathBuf,
    /// Comma-separated vertex ids.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<Vertex>,
    #[arg(long)]
    witnesses: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("rule").required(true).args(["lemma", "oracle", "interval"])))]
struct MandatoryArgs {
    /// Edge-list file, or an interval file with `--interval`.
    input: PathBuf,
    /// Local support test.
    #[arg(long)]
    lemma: bool,
    /// `V - v` is not an MEG-set.
    #[arg(long)]
    oracle: bool,
    /// Neighborhood diameter test on an interval model.
    #[arg(long)]
    interval: bool,
}

#[derive(Args, Debug)]
struct GadgetArgs {
    input: PathBuf,
    /// Output prefix; writes `<prefix>.edges` and `<prefix>.roles.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also solve the gadget exactly.
    #[arg(long)]
    solve: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Grid,
    Hypercube,
    RandomConnected,
    RandomInterval,
    RandomCubic,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: FamilyName,
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Edge probability for `random_connected`.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Side sizes for `complete_bipartite`.
    #[arg(long, default_value_t = 2)]
    a: usize,
    #[arg(long, default_value_t = 3)]
    b: usize,
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, default_value_t = 3)]
    cols: usize,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Endpoint range for `random_interval`.
    #[arg(long, default_value_t = 10)]
    span: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Directory of `.edges` and `.intervals` files.
    suite: PathBuf,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Solvers to run; `interval` applies to `.intervals` files only.
    #[arg(long, value_delimiter = ',', default_value = "exact,interval,greedy")]
    methods: Vec<BenchMethod>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchMethod {
    Exact,
    Interval,
    Greedy,
}

/// An input error; reported on stderr with exit code 2.
struct Failure(String);

impl From<MegError> for Failure {
    fn from(e: MegError) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Output of one command: what goes to stdout and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            if out.write_all(outcome.text.as_bytes()).is_err() {
                return 2;
            }
            outcome.code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult<Outcome> {
    let start = Instant::now();
    let (mut report, code) = match &cli.command {
        Command::Solve(args) => solve(args)?,
        Command::Approx(args) => approx(args)?,
        Command::Verify(args) => verify(args)?,
        Command::Mandatory(args) => mandatory(args)?,
        Command::Gadget(args) => gadget(args)?,
        Command::Gen(args) => return gen(args),
        Command::Bench(args) => return bench(args, cli.timing),
    };
    if cli.timing {
        report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let text = if cli.human {
        report.to_human()
    } else {
        report.to_json()
    };
    Ok(Outcome { text, code })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: crate::error::Result<T>) -> CliResult<T> {
    r.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    with_path(path, parse_edge_list(&read(path)?))
}

fn load_model(path: &Path) -> CliResult<IntervalModel> {
    with_path(path, parse_intervals(&read(path)?))
}

fn source(path: &Path) -> String {
    path.display().to_string()
}

fn result_report(
    command: &str,
    g: &Graph,
    path: &Path,
    res: &MegResult,
    witnesses: bool,
) -> Report {
    let mut report =
        Report::new(command, Instance::of(g, source(path)), res.method.as_str()).with_set(&res.meg);
    report.optimal = Some(res.optimal);
    if witnesses {
        report = report.with_witnesses(g, &res.witnesses);
    }
    report
}

fn solve(args: &SolveArgs) -> CliResult<(Report, i32)> {
    if args.interval {
        let model = load_model(&args.input)?;
        let g = match &args.graph {
            Some(path) => load_graph(path)?,
            None => model.to_graph(),
        };
        let res = with_path(&args.input, interval_min_meg(&g, Some(&model)))?;
        return Ok((
            result_report("solve", &g, &args.input, &res, args.witnesses),
            0,
        ));
    }
    let g = load_graph(&args.input)?;
    match args.budget {
        None => {
            let res = with_path(&args.input, min_meg_exact(&g, None))?
                .expect("unbounded search always succeeds");
            Ok((
                result_report("solve", &g, &args.input, &res, args.witnesses),
                0,
            ))
        }
        Some(budget) => {
            let found = with_path(&args.input, min_meg_exact(&g, Some(budget)))?;
            let answer = found.is_some();
            let mut report = match &found {
                Some(res) => result_report("solve", &g, &args.input, res, args.witnesses),
                None => Report::new("solve", Instance::of(&g, source(&args.input)), "exact"),
            };
            report.decision = Some(Decision { budget, answer });
            Ok((report, if answer { 0 } else { 1 }))
        }
    }
}

fn approx(args: &ApproxArgs) -> CliResult<(Report, i32)> {
    let g = load_graph(&args.input)?;
    let res = with_path(&args.input, approx_meg(&g))?;
    let mut report = result_report("approx", &g, &args.input, &res, args.witnesses);
    if args.certify {
        if g.n() > EXACT_MAX_VERTICES {
            return Err(MegError::TooLarge {
                n: g.n(),
                limit: EXACT_MAX_VERTICES,
            }
            .into());
        }
        let opt = min_meg_exact(&g, None)?.expect("unbounded search always succeeds");
        report.bound = Some(approx_ratio_bound(g.n(), g.m(), opt.size()));
    }
    Ok((report, 0))
}

fn verify(args: &VerifyArgs) -> CliResult<(Report, i32)> {
    let g = load_graph(&args.input)?;
    let (ok, witnesses) = with_path(&args.input, is_meg_set(&g, &args.set))?;
    let mut set = args.set.clone();
    set.sort_unstable();
    set.dedup();
    let mut report =
        Report::new("verify", Instance::of(&g, source(&args.input)), "verify").with_set(&set);
    report.verified = Some(ok);
    if args.witnesses || !ok {
        report = report.with_witnesses(&g, &witnesses);
    }
    Ok((report, if ok { 0 } else { 1 }))
}

fn mandatory(args: &MandatoryArgs) -> CliResult<(Report, i32)> {
    let (g, set, method) = if args.interval {
        let model = load_model(&args.input)?;
        let g = model.to_graph();
        with_path(&args.input, g.require_connected())?;
        let mut set = Vec::new();
        for v in 0..g.n() {
            if g.m() > 0 && is_mandatory_interval(&g, v)? {
                set.push(v);
            }
        }
        (g, set, "interval")
    } else {
        let g = load_graph(&args.input)?;
        let (set, method) = if args.lemma {
            (with_path(&args.input, mandatory_vertices(&g))?, "lemma")
        } else {
            (with_path(&args.input, mandatory_oracle(&g))?, "oracle")
        };
        (g, set, method)
    };
    Ok((
        Report::new("mandatory", Instance::of(&g, source(&args.input)), method).with_set(&set),
        0,
    ))
}

fn gadget(args: &GadgetArgs) -> CliResult<(Report, i32)> {
    let g = load_graph(&args.input)?;
    let map = with_path(&args.input, vc_gadget(&g))?;
    let prefix = args
        .out
        .clone()
        .unwrap_or_else(|| args.input.with_extension("gadget"));
    let edges_path = PathBuf::from(format!("{}.edges", prefix.display()));
    let roles_path = PathBuf::from(format!("{}.roles.json", prefix.display()));
    write_file(&edges_path, &write_edge_list(&map.ghat))?;
    write_file(&roles_path, &map.sidecar_json())?;

    let mut report = Report::new(
        "gadget",
        Instance::of(&map.ghat, source(&args.input)),
        "gadget",
    );
    report.outputs = Some(vec![source(&edges_path), source(&roles_path)]);
    if args.solve {
        let res = min_meg_exact(&map.ghat, None)?.expect("unbounded search always succeeds");
        report = report.with_set(&res.meg);
        report.optimal = Some(true);
    }
    Ok((report, 0))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

fn gen(args: &GenArgs) -> CliResult<Outcome> {
    let family = match args.family {
        FamilyName::Path => Family::Path { n: args.n },
        FamilyName::Cycle => Family::Cycle { n: args.n },
        FamilyName::Complete => Family::Complete { n: args.n },
        FamilyName::CompleteBipartite => Family::CompleteBipartite {
            a: args.a,
            b: args.b,
        },
        FamilyName::Grid => Family::Grid {
            rows: args.rows,
            cols: args.cols,
        },
        FamilyName::Hypercube => Family::Hypercube { dim: args.dim },
        FamilyName::RandomConnected => Family::RandomConnected {
            n: args.n,
            p: args.p,
        },
        FamilyName::RandomCubic => Family::RandomCubic { n: args.n },
        FamilyName::RandomInterval => Family::RandomInterval {
            n: args.n,
            span: args.span,
        },
    };
    let text = match family {
        Family::RandomInterval { n, span } => {
            write_intervals(&random_interval_model(n, span, args.seed)?)
        }
        family => write_edge_list(&generate(&GenSpec::new(family, args.seed))?),
    };
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Outcome {
                text: String::new(),
                code: 0,
            })
        }
        None => Ok(Outcome { text, code: 0 }),
    }
}

fn timed<T>(timing: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let start = Instant::now();
    let value = f();
    (value, timing.then(|| start.elapsed().as_secs_f64() * 1e3))
}

fn bench(args: &BenchArgs, timing: bool) -> CliResult<Outcome> {
    let entries = fs::read_dir(&args.suite)
        .map_err(|e| Failure(format!("cannot read suite {}: {e}", args.suite.display())))?;
    let mut files: Vec<PathBuf> = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Failure(e.to_string()))?.path();
        if matches!(
            path.extension().and_then(|e| e.to_str()),
            Some("edges" | "intervals")
        ) {
            files.push(path);
        }
    }
    files.sort();

    let mut rows = Vec::new();
    for path in &files {
        let name = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let is_interval = path.extension().is_some_and(|e| e == "intervals");
        let (g, model) = if is_interval {
            let model = load_model(path)?;
            (model.to_graph(), Some(model))
        } else {
            (load_graph(path)?, None)
        };
        with_path(path, g.require_connected())?;

        let mut row = |method: &str, size: usize, bound: Option<f64>, time_ms: Option<f64>| {
            rows.push(BenchRow {
                instance: name.clone(),
                method: method.into(),
                size,
                bound,
                time_ms,
            })
        };
        let wants = |m: BenchMethod| args.methods.contains(&m);
        let fits_exact = g.n() <= EXACT_MAX_VERTICES;
        // the greedy bound needs the optimum, so greedy rows solve exactly too
        let mut opt = None;
        if fits_exact && (wants(BenchMethod::Exact) || wants(BenchMethod::Greedy)) {
            let (res, t) = timed(timing, || min_meg_exact(&g, None));
            let size = with_path(path, res)?
                .expect("unbounded search always succeeds")
                .size();
            opt = Some(size);
            if wants(BenchMethod::Exact) {
                row("exact", size, None, t);
            }
        }
        if let (Some(model), true) = (&model, wants(BenchMethod::Interval)) {
            let (res, t) = timed(timing, || interval_min_meg(&g, Some(model)));
            row("interval", with_path(path, res)?.size(), None, t);
        }
        if wants(BenchMethod::Greedy) {
            let (res, t) = timed(timing, || approx_meg(&g));
            let bound = opt.map(|o| approx_ratio_bound(g.n(), g.m(), o));
            row("greedy", with_path(path, res)?.size(), bound, t);
        }
    }

    let csv = bench_csv(&rows);
    match &args.out {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(Outcome {
                text: summary_table(&rows),
                code: 0,
            })
        }
        None => Ok(Outcome { text: csv, code: 0 }),
    }
}

fn summary_table(rows: &[BenchRow]) -> String {
    let width = rows
        .iter()
        .map(|r| r.instance.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = format!(
        "{:<width$}  {:<8}  {:>5}  {:>10}\n",
        "instance", "method", "size", "bound"
    );
    for r in rows {
        let bound = r
            .bound
            .map(|b| format!("{b:.3}"))
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:<width$}  {:<8}  {:>5}  {:>10}\n",
            r.instance, r.method, r.size, bound
        ));
    }
    out
}
