use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use mixdim::families::{theta, ThetaSpec};
use mixdim::harness::{self, Job, ReportFormat, ReportWriter, Status, TheoremConfig};
use mixdim::invariants::{cyclomatic_number, leaf_count, vertex_connectivity};
use mixdim::io::{enumerate_connected, parse_document, IoError};
use mixdim::metric::{metric_dimension, SearchError, SearchOptions, Variant};
use mixdim::{Graph, GraphError};

const EXIT_FINDING: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_IO: u8 = 4;

/// Exact mixed metric dimension and verification of `mdim <= L1 + 2c`.
#[derive(Parser)]
#[command(name = "mixdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and exact dimensions of a single graph.
    Compute(ComputeArgs),
    /// Exact dimension of every theta graph up to a total path length.
    ThetaScan(ThetaScanArgs),
    /// Check the bound over a graph population and classify equality cases.
    Verify(VerifyArgs),
    /// Run the reproduction suites.
    CheckTheorems(TheoremArgs),
}

#[derive(Args, Clone, Copy)]
struct SearchFlags {
    /// Disable every search pruning rule.
    #[arg(long)]
    no_prune: bool,
    /// Per-graph search node budget.
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
}

impl SearchFlags {
    fn options(self) -> SearchOptions {
        let base = if self.no_prune {
            SearchOptions::exhaustive()
        } else {
            SearchOptions::pruned()
        };
        base.with_max_nodes(Some(self.max_nodes))
    }
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct FormatFlags {
    /// One JSON object per line.
    #[arg(long)]
    json: bool,
    /// CSV with a header row.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph file (graph6, sparse6 or edge list; first graph is used), `-` for stdin.
    #[arg(long, conflicts_with_all = ["theta", "graph"])]
    input: Option<PathBuf>,
    /// Build the theta graph with these path lengths.
    #[arg(long, value_parser = parse_theta)]
    theta: Option<ThetaSpec>,
    /// Inline graph6 or sparse6 string.
    #[arg(long)]
    graph: Option<String>,
    /// Which dimensions to compute.
    #[arg(long, value_delimiter = ',', default_value = "mixed")]
    dims: Vec<String>,
    #[command(flatten)]
    search: SearchFlags,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ThetaScanArgs {
    /// Largest a + b + c to include.
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u64).range(5..))]
    max_total: u64,
    #[command(flatten)]
    search: SearchFlags,
    #[command(flatten)]
    format: FormatFlags,
}

#[derive(Args)]
struct VerifyArgs {
    /// graph6/sparse6 file (one graph per line) or edge list, `-` for stdin.
    #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
    input: Option<PathBuf>,
    /// Use every connected graph on 2..=N vertices from the built-in enumerator.
    #[arg(long)]
    enumerate: Option<usize>,
    #[command(flatten)]
    format: FormatFlags,
    /// Write reports here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    #[command(flatten)]
    search: SearchFlags,
}

#[derive(Args)]
struct TheoremArgs {
    #[arg(long, default_value_t = 7)]
    tree_max_n: usize,
    #[arg(long, default_value_t = 12)]
    cycle_max_n: usize,
    #[arg(long, default_value_t = 12)]
    cactus_max_n: usize,
    #[arg(long, default_value_t = 7)]
    three_connected_max_n: usize,
    #[arg(long, default_value_t = 13)]
    triple_max_n: usize,
    #[arg(long, default_value_t = 15)]
    theta_max_total: usize,
    /// Random (graph, set, pair) samples for the enclosure checks.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 6)]
    pruning_max_n: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[command(flatten)]
    search: SearchFlags,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_theta(s: &str) -> Result<ThetaSpec, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [a, b, c] => ThetaSpec::new(a, b, c).map_err(|e| e.to_string()),
        _ => Err("expected three comma-separated lengths".into()),
    }
}

/// A failure that maps to a process exit code.
struct Failure(u8, String);

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_IO, format!("I/O error: {e}"))
    }
}

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Failure(EXIT_IO, format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn parse_failure(e: IoError) -> Failure {
    match e {
        IoError::Graph(g) => Failure(EXIT_INVALID, format!("invalid graph: {g}")),
        other => Failure(EXIT_PARSE, format!("parse error: {other}")),
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn compute(args: ComputeArgs) -> Result<u8, Failure> {
    let (source, g): (String, Graph) = if let Some(spec) = args.theta {
        (spec.to_string(), theta(spec).expect("valid spec").graph)
    } else {
        let (source, text) = match (&args.input, &args.graph) {
            (Some(path), _) => (path.display().to_string(), read_source(path)?),
            (None, Some(inline)) => (inline.clone(), inline.clone()),
            (None, None) => {
                return Err(Failure(
                    EXIT_PARSE,
                    "one of --input, --graph, --theta is required".into(),
                ))
            }
        };
        let record = parse_document(&text)
            .into_iter()
            .next()
            .ok_or_else(|| Failure(EXIT_PARSE, "no graph in input".into()))?
            .map_err(|(_, e)| parse_failure(e))?;
        (source, record.graph)
    };
    if !g.is_connected() {
        return Err(Failure(
            EXIT_INVALID,
            format!("invalid graph: {}", GraphError::Disconnected),
        ));
    }

    let mut variants = Vec::new();
    for d in &args.dims {
        variants.push(match d.trim() {
            "mixed" => Variant::Mixed,
            "vertex" => Variant::VertexOnly,
            "edge" => Variant::EdgeOnly,
            other => return Err(Failure(EXIT_PARSE, format!("unknown dimension {other:?}"))),
        });
    }

    let mut fields = serde_json::Map::new();
    fields.insert("source".into(), source.into());
    fields.insert("n".into(), g.n().into());
    fields.insert("m".into(), g.m().into());
    fields.insert("L1".into(), leaf_count(&g).into());
    fields.insert("c".into(), cyclomatic_number(&g).into());
    fields.insert("kappa".into(), vertex_connectivity(&g).into());
    fields.insert("bound".into(), (leaf_count(&g) + 2 * cyclomatic_number(&g)).into());
    for variant in variants {
        let started = Instant::now();
        let key = match variant {
            Variant::Mixed => "mdim",
            Variant::VertexOnly => "vdim",
            Variant::EdgeOnly => "edim",
        };
        match metric_dimension(&g, variant, args.search.options()) {
            Ok(w) => {
                fields.insert(key.into(), w.dimension.into());
                fields.insert(
                    format!("{key}_witness"),
                    serde_json::to_value(&w.witness).expect("plain data"),
                );
                fields.insert(format!("{key}_nodes"), w.nodes_explored.into());
            }
            Err(SearchError::BudgetExceeded(b)) => {
                fields.insert(key.into(), format!("timeout after {b} nodes").into());
            }
            Err(e) => return Err(Failure(EXIT_INVALID, format!("invalid graph: {e}"))),
        }
        fields.insert(format!("{key}_ms"), (started.elapsed().as_secs_f64() * 1e3).into());
    }

    let mut out = io::stdout().lock();
    if args.json {
        writeln!(out, "{}", serde_json::Value::Object(fields))?;
    } else {
        for (k, v) in fields {
            match v {
                serde_json::Value::String(s) => writeln!(out, "{k}: {s}")?,
                other => writeln!(out, "{k}: {other}")?,
            }
        }
    }
    Ok(0)
}

fn theta_scan(args: ThetaScanArgs) -> Result<u8, Failure> {
    let rows = harness::theta_scan(args.max_total as usize, args.search.options());
    let mut out = open_output(None)?;
    if args.format.json {
        for row in &rows {
            serde_json::to_writer(&mut out, row).map_err(io::Error::from)?;
            writeln!(out)?;
        }
    } else if args.format.csv {
        writeln!(out, "a,b,c,n,balanced,mdim,generator_ok,no_pair_resolves,verdict")?;
        for r in &rows {
            let [a, b, c] = r.spec.lengths();
            let pair = r.no_pair_resolves.map_or(String::new(), |p| p.to_string());
            let verdict = if r.verdict_ok { "OK" } else { "FAIL" };
            writeln!(
                out,
                "{a},{b},{c},{},{},{},{},{pair},{verdict}",
                r.n, r.balanced, r.mdim, r.generator_ok
            )?;
        }
    } else {
        writeln!(
            out,
            "{:>3} {:>3} {:>3} {:>3}  {:<10} {:>4}  {:<9} {:<8} verdict",
            "a", "b", "c", "n", "balanced", "mdim", "gen_ok", "no_pair"
        )?;
        for r in &rows {
            let [a, b, c] = r.spec.lengths();
            let pair = r.no_pair_resolves.map_or("-".to_string(), |p| p.to_string());
            let verdict = if r.verdict_ok { "OK" } else { "FAIL" };
            writeln!(
                out,
                "{a:>3} {b:>3} {c:>3} {:>3}  {:<10} {:>4}  {:<9} {:<8} {verdict}",
                r.n, r.balanced, r.mdim, r.generator_ok, pair
            )?;
        }
    }
    out.flush()?;
    let failed = rows.iter().filter(|r| !r.verdict_ok).count();
    eprintln!("{} theta graphs, {failed} failed verdicts", rows.len());
    Ok(if failed > 0 { EXIT_FINDING } else { 0 })
}

fn verify(args: VerifyArgs) -> Result<u8, Failure> {
    let jobs: Vec<Job> = match (&args.input, args.enumerate) {
        (Some(path), _) => parse_document(&read_source(path)?)
            .into_iter()
            .map(|r| match r {
                Ok(rec) => Job {
                    id: format!("line{:06}", rec.line),
                    graph: Ok(rec.graph),
                },
                Err((line, e)) => Job {
                    id: format!("line{line:06}"),
                    graph: Err(e),
                },
            })
            .collect(),
        (None, Some(max_n)) => {
            let mut jobs = Vec::new();
            for n in 2..=max_n {
                let graphs = enumerate_connected(n).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
                jobs.extend(graphs.enumerate().map(|(i, g)| Job {
                    id: format!("n{n}-{i:04}"),
                    graph: Ok(g),
                }));
            }
            jobs
        }
        (None, None) => unreachable!("clap requires a population"),
    };

    let format = if args.format.json {
        ReportFormat::Json
    } else {
        ReportFormat::Csv
    };
    let mut writer = ReportWriter::new(format, open_output(args.out.as_ref())?)?;
    let summary = harness::run(jobs, args.workers, args.search.options(), |r| writer.write(r))?;
    writer.finish()?;

    for (id, e) in &summary.parse_errors {
        eprintln!("parse error at {id}: {e}");
    }
    for f in &summary.findings {
        eprintln!("FINDING {}", serde_json::to_string(f).expect("plain data"));
    }
    let counts: Vec<String> = Status::ALL
        .iter()
        .map(|&s| format!("{}={}", s.label(), summary.count(s)))
        .collect();
    eprintln!(
        "graphs={} parse_errors={} {} equality_cactus={} equality_balanced_theta={} findings={}",
        summary.total,
        summary.parse_errors.len(),
        counts.join(" "),
        summary.equality_qualifying_cactus,
        summary.equality_balanced_theta,
        summary.findings.len()
    );
    Ok(if summary.has_findings() { EXIT_FINDING } else { 0 })
}

fn check_theorems(args: TheoremArgs) -> Result<u8, Failure> {
    let config = TheoremConfig {
        tree_max_n: args.tree_max_n,
        cycle_max_n: args.cycle_max_n,
        cactus_max_n: args.cactus_max_n,
        three_connected_max_n: args.three_connected_max_n.min(mixdim::io::MAX_ENUMERATE_N),
        triple_max_n: args.triple_max_n,
        theta_max_total: args.theta_max_total,
        enclosure_samples: args.samples,
        pruning_max_n: args.pruning_max_n.min(mixdim::io::MAX_ENUMERATE_N),
        seed: args.seed,
        options: args.search.options(),
    };
    let outcomes = harness::check_theorems(&config);
    let mut out = io::stdout().lock();
    for o in &outcomes {
        writeln!(out, "{o}")?;
    }
    Ok(if outcomes.iter().all(|o| o.passed()) {
        0
    } else {
        EXIT_FINDING
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::ThetaScan(a) => theta_scan(a),
        Command::Verify(a) => verify(a),
        Command::CheckTheorems(a) => check_theorems(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
